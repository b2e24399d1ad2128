#include <benchmark/benchmark.h>

#include "nabla/nabla.hpp"

using namespace nabla;

static void BM_CountTotal(benchmark::State& state) {
    const Dimension n(static_cast<int>(state.range(0)));
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(count_total(n, k));
}
BENCHMARK(BM_CountTotal)->Args({3, 100})->Args({10, 100})->Args({64, 500});

static void BM_BruteForceCount(benchmark::State& state) {
    const Dimension n(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_count(n, 12));
}
BENCHMARK(BM_BruteForceCount)->Arg(3)->Arg(6);

static void BM_CharacteristicPolynomial(benchmark::State& state) {
    const AdjacencyMatrix a = build_adjacency(Dimension(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(characteristic_polynomial(a));
}
BENCHMARK(BM_CharacteristicPolynomial)->Arg(10)->Arg(32);

static void BM_MinimalRecurrence(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CountSequence seq = count_sequence(Dimension(n), 2 * n + 8);
    for (auto _ : state) benchmark::DoNotOptimize(minimal_recurrence(seq));
}
BENCHMARK(BM_MinimalRecurrence)->Arg(10)->Arg(32);

static void BM_IsZeroOperator(benchmark::State& state) {
    const Dimension n(5);
    const CompositionWord w(n, {3, 3, 3, 3});
    for (auto _ : state) benchmark::DoNotOptimize(is_zero_operator(w));
}
BENCHMARK(BM_IsZeroOperator);

static void BM_ExteriorDerivative(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    DifferentialForm w(Dimension(n), 2);
    for (const auto& s : index_subsets(n, 2)) {
        Polynomial p(n);
        for (const auto& e : monomials_of_degree(n, 3)) p.add_term(e, Rational(s.front() + 1));
        w.add(s, p);
    }
    for (auto _ : state) benchmark::DoNotOptimize(exterior_derivative(w));
}
BENCHMARK(BM_ExteriorDerivative)->Arg(4)->Arg(8);
BENCHMARK_MAIN();
