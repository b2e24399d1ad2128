#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nabla/composition_graph.hpp"

namespace nabla {

/// A chain of operator indices in application order: indices[0] is applied
/// first. Construction validates the indices but not composability.
class CompositionWord {
public:
    CompositionWord(Dimension n, std::vector<int> indices);

    Dimension dimension() const noexcept { return n_; }
    const std::vector<int>& indices() const noexcept { return indices_; }
    std::size_t length() const noexcept { return indices_.size(); }

    /// First consecutive (previous, next) pair that is not composable.
    std::optional<std::pair<int, int>> first_undefined_pair() const;
    bool meaningful() const { return !first_undefined_pair().has_value(); }

    friend bool operator==(const CompositionWord&, const CompositionWord&) = default;
    friend auto operator<=>(const CompositionWord& a, const CompositionWord& b) {
        return a.indices_ <=> b.indices_;
    }

private:
    Dimension n_;
    std::vector<int> indices_;
};

/// "(1,3,1)"
std::string render_application_order(const CompositionWord& w);

/// Composition notation, last-applied leftmost: "∇1∘∇3∘∇1".
std::string render_composition(const CompositionWord& w);

/// For n = 3 the classical names, last-applied leftmost ("grad∘div");
/// empty otherwise.
std::string render_classical(const CompositionWord& w);

}  // namespace nabla
