#pragma once

#include <cstdint>
#include <vector>

#include "nabla/bigint.hpp"
#include "nabla/composition_graph.hpp"
#include "nabla/composition_word.hpp"

namespace nabla {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// f_i(k) for i = 1..n: meaningful words of length k whose first-applied
/// operator is nabla_i. per_start[i - 1] holds f_i(k).
struct CountVector {
    Dimension n;
    int k;
    std::vector<BigInt> per_start;

    BigInt total() const;
};

/// f(1), ..., f(k_max) for one dimension.
class CountSequence {
public:
    CountSequence(Dimension n, std::vector<BigInt> values);

    Dimension dimension() const noexcept { return n_; }
    /// Number of stored terms; the last stored index is k_max().
    int k_max() const noexcept { return static_cast<int>(values_.size()); }
    /// f(k), 1 <= k <= k_max().
    const BigInt& at(int k) const;
    const std::vector<BigInt>& values() const noexcept { return values_; }

private:
    Dimension n_;
    std::vector<BigInt> values_;
};

CountVector count_per_start(Dimension n, int k);

/// f(k) = v A^(k-1) v^T for k >= 1; f(0) = 1 (the empty composition).
BigInt count_total(Dimension n, int k);

/// f(1..k_max) via k_max - 1 matrix-vector products.
CountSequence count_sequence(Dimension n, int k_max);

/// All meaningful words of length k, lexicographic by index sequence.
/// Throws CapacityError when f(k) exceeds `cap`.
std::vector<CompositionWord> enumerate_words(Dimension n, int k,
                                             std::uint64_t cap = kDefaultEnumerationCap);

/// Depth-first count of meaningful words of length k that never touches the
/// adjacency matrix; an independent check on count_total.
BigInt brute_force_count(Dimension n, int k);

}  // namespace nabla
