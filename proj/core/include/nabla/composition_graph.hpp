#pragma once

#include <cstddef>
#include <vector>

namespace nabla {

/// Dimension of the coordinate space R^n. Only n >= 3 is accepted.
class Dimension {
public:
    explicit Dimension(int n);

    int n() const noexcept { return n_; }
    /// floor(n / 2)
    int m() const noexcept { return n_ / 2; }

    friend bool operator==(Dimension, Dimension) = default;

private:
    int n_;
};

/// Throws DomainError unless 1 <= i <= n.
void check_operator_index(int i, Dimension n);

/// True iff applying nabla_j after nabla_i is meaningful:
/// j == i + 1 or i + j == n + 1. Indices are 1-based.
bool is_composable(int i, int j, Dimension n);

/// Boolean adjacency matrix of the composability relation, 1-based access.
class AdjacencyMatrix {
public:
    explicit AdjacencyMatrix(Dimension n);

    Dimension dimension() const noexcept { return n_; }
    int size() const noexcept { return n_.n(); }
    bool operator()(int i, int j) const;
    int row_sum(int i) const;

    friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

private:
    Dimension n_;
    std::vector<bool> entries_;  // row-major, 0-based
};

AdjacencyMatrix build_adjacency(Dimension n);

/// Ascending list of j with is_composable(i, j, n).
std::vector<int> successors(int i, Dimension n);

}  // namespace nabla
