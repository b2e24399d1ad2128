// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nabla/nabla.hpp"
#include "support/oracles.hpp"

using namespace nabla;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

struct Criterion {
    int id;
    std::string title;
    double time_limit_s;  // <= 0: no runtime bound
    std::function<Outcome()> body;
};

std::vector<BigInt> big(std::initializer_list<long> xs) {
    std::vector<BigInt> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

Outcome fibonacci_counts() {
    Outcome o;
    const auto first = big({3, 5, 8, 13, 21});
    for (int k = 1; k <= 5; ++k) {
        if (count_total(Dimension(3), k) != first[static_cast<std::size_t>(k - 1)]) o.fail("f(" + std::to_string(k) + ")");
    }
    for (int k = 1; k <= 30; ++k) {
        if (count_total(Dimension(3), k) != oracle::fibonacci(k + 3)) o.fail("f(" + std::to_string(k) + ") != F(k+3)");
    }
    if (o.passed) o.detail = "f(1..5) = 3,5,8,13,21; f(k) = F(k+3) for k = 1..30";
    return o;
}

Outcome brute_force_oracle() {
    Outcome o;
    for (int n = 3; n <= 6; ++n) {
        for (int k = 1; k <= 10; ++k) {
            const BigInt a = count_total(Dimension(n), k), b = brute_force_count(Dimension(n), k);
            if (a != b) o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + a.get_str() + " vs " + b.get_str());
        }
    }
    if (o.passed) o.detail = "40/40 (n,k) pairs equal";
    return o;
}

Outcome recurrence_table() {
    Outcome o;
    int matched = 0;
    std::ostringstream mismatches;
    for (const auto& [n, row] : paper_reference_table()) {
        const auto seq = count_sequence(Dimension(n), 2 * n + 8);
        const Recurrence minimal = minimal_recurrence(seq);
        if (minimal.same_relation(row)) {
            ++matched;
            continue;
        }
        mismatches << " n=" << n << ": minimal " << minimal.to_string() << " vs table " << row.to_string()
                   << (verify_recurrence(row, seq) ? " [row holds, not minimal];" : " [row does not hold];");
        o.passed = false;
    }
    o.detail = std::to_string(matched) + "/8 rows reproduced" + (o.passed ? "" : ";" + mismatches.str());
    return o;
}

Outcome characteristic_recurrence() {
    Outcome o;
    for (int n = 3; n <= 12; ++n) {
        const Dimension dim(n);
        const IntegerPolynomial p = characteristic_polynomial(build_adjacency(dim));
        const auto seq = count_sequence(dim, 2 * n + 20);
        for (int k = n + 1; k <= n + 20; ++k) {
            // sum_{t=0..n} p_t f(k - n + t) == 0
            BigInt residual = 0;
            for (int t = 0; t <= n; ++t) residual += p.coefficient(t) * seq.at(k - n + t);
            if (residual != 0) o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + " residual " + residual.get_str());
        }
    }
    if (o.passed) o.detail = "zero residual for k = n+1..n+20, n = 3..12";
    return o;
}

/// Every monomial of total degree <= 3 in x1..x3 with pairwise distinct
/// rational coefficients.
Polynomial generic_polynomial(int seed_offset) {
    Polynomial p(3);
    int t = 0;
    for (int degree = 0; degree <= 3; ++degree) {
        for (const auto& e : monomials_of_degree(3, degree)) {
            Rational c(seed_offset * 101 + 2 * t + 1, t + 2);
            c.canonicalize();
            p.add_term(e, c);
            ++t;
        }
    }
    return p;
}

Outcome vector_calculus() {
    Outcome o;
    const Dimension three(3);
    const Polynomial f = generic_polynomial(1);
    const Polynomial f1 = generic_polynomial(2), f2 = generic_polynomial(3), f3 = generic_polynomial(4);
    const ComponentVector field(three, 1, {f1, f2, f3});
    if (apply_nabla(1, ComponentVector(three, 0, {f})).entries() !=
        std::vector<Polynomial>{f.derivative(1), f.derivative(2), f.derivative(3)}) {
        o.fail("grad mismatch");
    }
    if (apply_nabla(2, field).entries() != std::vector<Polynomial>{f3.derivative(2) - f2.derivative(3),
                                                                  f1.derivative(3) - f3.derivative(1),
                                                                  f2.derivative(1) - f1.derivative(2)}) {
        o.fail("curl mismatch");
    }
    if (apply_nabla(3, field).entries() !=
        std::vector<Polynomial>{f1.derivative(1) + f2.derivative(2) + f3.derivative(3)}) {
        o.fail("div mismatch");
    }
    std::mt19937_64 rng(31337);
    const CompositionWord curl_grad(three, {1, 2}), div_curl(three, {2, 3});
    for (int t = 0; t < 50; ++t) {
        const ComponentVector scalar(three, 0, {oracle::random_polynomial(rng, 3, 5, 8)});
        if (!apply_word(curl_grad, scalar).is_zero()) o.fail("curl(grad) nonzero on " + scalar.to_string());
        const ComponentVector v(three, 1,
                                {oracle::random_polynomial(rng, 3, 5, 8), oracle::random_polynomial(rng, 3, 5, 8),
                                 oracle::random_polynomial(rng, 3, 5, 8)});
        if (!apply_word(div_curl, v).is_zero()) o.fail("div(curl) nonzero on " + v.to_string());
    }
    if (o.passed) o.detail = "grad/curl/div exact on generic input; curl∘grad and div∘curl zero on 50 inputs each";
    return o;
}

Outcome triviality_concordance() {
    Outcome o;
    int words = 0;
    for (int n = 3; n <= 5; ++n) {
        for (int len = 1; len <= 4; ++len) {
            for (const auto& w : enumerate_words(Dimension(n), len)) {
                ++words;
                if (is_zero_operator(w) != (classify_word(w) == TrivialityClass::Zero)) {
                    o.fail("n=" + std::to_string(n) + " word " + render_application_order(w));
                }
            }
        }
    }
    if (o.passed) o.detail = std::to_string(words) + " meaningful words, 0 mismatches";
    return o;
}

Outcome nontrivial_chains() {
    Outcome o;
    for (int len = 2; len <= 5; ++len) {
        // Families (∇1∘)∇3∘..∘∇1, ∇2∘..∘∇2, (∇3∘)∇1∘..∘∇3 in application order.
        std::vector<std::vector<int>> expected;
        for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {3, 1}}) {
            std::vector<int> w;
            for (int t = 0; t < len; ++t) w.push_back(t % 2 == 0 ? a : b);
            expected.push_back(w);
        }
        std::vector<std::vector<int>> got;
        for (const auto& w : enumerate_nontrivial(Dimension(3), len)) got.push_back(w.indices());
        if (got != expected) o.fail("length " + std::to_string(len));
    }
    if (o.passed) o.detail = "three alternating families for L = 2..5";
    return o;
}

Outcome property_suites() {
    Outcome o;
    std::mt19937_64 rng(4242);
    int round_trips = 0, linear = 0;
    for (int t = 0; t < 1000; ++t) {
        const int n = 3 + t % 5;
        const Dimension dim(n);
        const int degree = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
        DifferentialForm form(dim, degree);
        for (const auto& s : index_subsets(n, degree)) form.add(s, oracle::random_polynomial(rng, n, 3, 3));
        if (iso_from_components(iso_to_components(form), degree) != form) o.fail("form round trip, n=" + std::to_string(n));
        const ComponentVector v = iso_to_components(form);
        if (iso_to_components(iso_from_components(v, degree)) != v) o.fail("vector round trip, n=" + std::to_string(n));
        ++round_trips;
    }
    for (int t = 0; t < 1000; ++t) {
        const int n = 3 + t % 3;
        const Dimension dim(n);
        const int len = 1 + t % 3;
        std::vector<int> idx{1 + static_cast<int>(rng() % static_cast<unsigned>(n))};
        while (static_cast<int>(idx.size()) < len) {
            const auto next = successors(idx.back(), dim);
            idx.push_back(next[rng() % next.size()]);
        }
        const CompositionWord w(dim, idx);
        const int level = domain_level(idx.front(), dim);
        auto random_vector = [&] {
            std::vector<Polynomial> entries;
            for (std::size_t s = 0; s < index_subsets(n, level).size(); ++s) {
                entries.push_back(oracle::random_polynomial(rng, n, 4, 3));
            }
            return ComponentVector(dim, level, std::move(entries));
        };
        const ComponentVector u = random_vector(), v = random_vector();
        const Rational a = oracle::random_rational(rng), b = oracle::random_rational(rng);
        if (apply_word(w, a * u + b * v) != a * apply_word(w, u) + b * apply_word(w, v)) {
            o.fail("linearity, word " + render_application_order(w));
        }
        ++linear;
    }
    if (o.passed) {
        o.detail = std::to_string(round_trips) + " round-trip cases, " + std::to_string(linear) + " linearity cases";
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Fibonacci counts for n = 3", 1.0, fibonacci_counts},
        {2, "matrix count equals brute-force count, n = 3..6, k = 1..10", 10.0, brute_force_oracle},
        {3, "minimal recurrences reproduce the reference table, n = 3..10", 5.0, recurrence_table},
        {4, "characteristic-polynomial recurrence annihilates counts, n = 3..12", 0.0, characteristic_recurrence},
        {5, "grad/curl/div identities and d∘d = 0 on R^3", 0.0, vector_calculus},
        {6, "triviality concordance, n = 3..5, length <= 4", 60.0, triviality_concordance},
        {7, "non-trivial chains on R^3, L = 2..5", 0.0, nontrivial_chains},
        {8, "round-trip and linearity property suites, 1000 cases", 0.0, property_suites},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && elapsed >= c.time_limit_s) {
            o.fail("runtime " + std::to_string(elapsed) + " s exceeds " + std::to_string(c.time_limit_s) + " s");
        }
        if (!o.passed) ++failures;
        std::ostringstream line;
        line.precision(3);
        line << std::fixed << (o.passed ? "[PASS] " : "[FAIL] ") << "AC" << c.id << " " << c.title << " ("
             << elapsed << " s): " << o.detail;
        std::cout << line.str() << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " acceptance criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
