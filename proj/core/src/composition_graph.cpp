#include "nabla/composition_graph.hpp"

#include <string>

#include "nabla/errors.hpp"

namespace nabla {

Dimension::Dimension(int n) : n_(n) {
    if (n < 3) {
        throw DomainError("dimension must be at least 3, got " + std::to_string(n));
    }
}

void check_operator_index(int i, Dimension n) {
    if (i < 1 || i > n.n()) {
        throw DomainError("operator index " + std::to_string(i) + " outside 1.." +
                          std::to_string(n.n()));
    }
}

bool is_composable(int i, int j, Dimension n) {
    check_operator_index(i, n);
    check_operator_index(j, n);
    return j == i + 1 || i + j == n.n() + 1;
}

AdjacencyMatrix::AdjacencyMatrix(Dimension n)
    : n_(n), entries_(static_cast<std::size_t>(n.n()) * n.n(), false) {
    const int size = n.n();
    for (int i = 1; i <= size; ++i) {
        for (int j = 1; j <= size; ++j) {
            entries_[static_cast<std::size_t>(i - 1) * size + (j - 1)] = is_composable(i, j, n);
        }
    }
}

bool AdjacencyMatrix::operator()(int i, int j) const {
    check_operator_index(i, n_);
    check_operator_index(j, n_);
    return entries_[static_cast<std::size_t>(i - 1) * size() + (j - 1)];
}

int AdjacencyMatrix::row_sum(int i) const {
    int sum = 0;
    for (int j = 1; j <= size(); ++j) sum += (*this)(i, j) ? 1 : 0;
    return sum;
}

AdjacencyMatrix build_adjacency(Dimension n) { return AdjacencyMatrix(n); }

std::vector<int> successors(int i, Dimension n) {
    check_operator_index(i, n);
    std::vector<int> out;
    // At most two candidates: i + 1 and n + 1 - i.
    for (int j = 1; j <= n.n(); ++j) {
        if (is_composable(i, j, n)) out.push_back(j);
    }
    return out;
}

}  // namespace nabla
