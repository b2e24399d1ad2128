#include "nabla/counting.hpp"

#include <string>

#include "nabla/errors.hpp"

namespace nabla {

namespace {

void check_order(int k, int min) {
    if (k < min) {
        throw DomainError("composition order must be >= " + std::to_string(min) + ", got " +
                          std::to_string(k));
    }
}

// Row i of A as its (at most two) successor columns, 0-based.
std::vector<std::vector<std::size_t>> rows_of(const AdjacencyMatrix& a) {
    std::vector<std::vector<std::size_t>> rows(static_cast<std::size_t>(a.size()));
    for (int i = 1; i <= a.size(); ++i) {
        for (int j = 1; j <= a.size(); ++j) {
            if (a(i, j)) rows[static_cast<std::size_t>(i - 1)].push_back(static_cast<std::size_t>(j - 1));
        }
    }
    return rows;
}

// One step of f(k) = A f(k-1).
std::vector<BigInt> step(const std::vector<std::vector<std::size_t>>& rows, const std::vector<BigInt>& prev) {
    std::vector<BigInt> next(rows.size(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j : rows[i]) next[i] += prev[j];
    }
    return next;
}

BigInt sum(const std::vector<BigInt>& v) {
    BigInt s = 0;
    for (const auto& x : v) s += x;
    return s;
}

void count_depth_first(Dimension n, int last, int remaining, BigInt& acc) {
    if (remaining == 0) {
        ++acc;
        return;
    }
    for (int j = 1; j <= n.n(); ++j) {
        if (j == last + 1 || last + j == n.n() + 1) count_depth_first(n, j, remaining - 1, acc);
    }
}

}  // namespace

BigInt CountVector::total() const { return sum(per_start); }

CountSequence::CountSequence(Dimension n, std::vector<BigInt> values)
    : n_(n), values_(std::move(values)) {}

const BigInt& CountSequence::at(int k) const {
    if (k < 1 || k > k_max()) {
        throw DomainError("sequence index " + std::to_string(k) + " outside 1.." +
                          std::to_string(k_max()));
    }
    return values_[static_cast<std::size_t>(k - 1)];
}

CountVector count_per_start(Dimension n, int k) {
    check_order(k, 1);
    const auto rows = rows_of(build_adjacency(n));
    std::vector<BigInt> f(static_cast<std::size_t>(n.n()), 1);
    for (int step_k = 2; step_k <= k; ++step_k) f = step(rows, f);
    return CountVector{n, k, std::move(f)};
}

BigInt count_total(Dimension n, int k) {
    check_order(k, 0);
    if (k == 0) return 1;
    return count_per_start(n, k).total();
}

CountSequence count_sequence(Dimension n, int k_max) {
    check_order(k_max, 1);
    const auto rows = rows_of(build_adjacency(n));
    std::vector<BigInt> f(static_cast<std::size_t>(n.n()), 1);
    std::vector<BigInt> values;
    values.reserve(static_cast<std::size_t>(k_max));
    values.push_back(sum(f));
    for (int k = 2; k <= k_max; ++k) {
        f = step(rows, f);
        values.push_back(sum(f));
    }
    return CountSequence(n, std::move(values));
}

std::vector<CompositionWord> enumerate_words(Dimension n, int k, std::uint64_t cap) {
    check_order(k, 1);
    const BigInt expected = count_total(n, k);
    if (expected > BigInt(std::to_string(cap))) {
        throw CapacityError("enumeration of " + to_decimal(expected) + " words exceeds cap " +
                                std::to_string(cap),
                            cap);
    }
    std::vector<CompositionWord> out;
    out.reserve(expected.get_ui());

    // Iterative depth-first walk; successors are ascending so output is
    // lexicographic.
    std::vector<std::vector<int>> choices;
    std::vector<std::size_t> cursor;
    std::vector<int> word;
    std::vector<int> roots(static_cast<std::size_t>(n.n()));
    for (int i = 1; i <= n.n(); ++i) roots[static_cast<std::size_t>(i - 1)] = i;
    choices.push_back(roots);
    cursor.push_back(0);
    while (!cursor.empty()) {
        auto depth = cursor.size() - 1;
        if (cursor[depth] == choices[depth].size()) {
            choices.pop_back();
            cursor.pop_back();
            if (!word.empty()) word.pop_back();
            continue;
        }
        const int next = choices[depth][cursor[depth]++];
        word.push_back(next);
        if (static_cast<int>(word.size()) == k) {
            out.emplace_back(n, word);
            word.pop_back();
        } else {
            choices.push_back(successors(next, n));
            cursor.push_back(0);
        }
    }
    return out;
}

BigInt brute_force_count(Dimension n, int k) {
    check_order(k, 0);
    if (k == 0) return 1;
    BigInt acc = 0;
    for (int i = 1; i <= n.n(); ++i) count_depth_first(n, i, k - 1, acc);
    return acc;
}

}  // namespace nabla
