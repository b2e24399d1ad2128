#include "nabla/composition_word.hpp"

#include <array>

#include "nabla/errors.hpp"

namespace nabla {

CompositionWord::CompositionWord(Dimension n, std::vector<int> indices)
    : n_(n), indices_(std::move(indices)) {
    if (indices_.empty()) throw DomainError("composition word must be nonempty");
    for (int i : indices_) check_operator_index(i, n_);
}

std::optional<std::pair<int, int>> CompositionWord::first_undefined_pair() const {
    for (std::size_t t = 0; t + 1 < indices_.size(); ++t) {
        if (!is_composable(indices_[t], indices_[t + 1], n_)) {
            return std::pair{indices_[t], indices_[t + 1]};
        }
    }
    return std::nullopt;
}

std::string render_application_order(const CompositionWord& w) {
    std::string out = "(";
    for (std::size_t t = 0; t < w.length(); ++t) {
        if (t) out += ",";
        out += std::to_string(w.indices()[t]);
    }
    return out + ")";
}

std::string render_composition(const CompositionWord& w) {
    std::string out;
    const auto& idx = w.indices();
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
        if (!out.empty()) out += "∘";
        out += "∇" + std::to_string(*it);
    }
    return out;
}

std::string render_classical(const CompositionWord& w) {
    if (w.dimension().n() != 3) return {};
    static constexpr std::array<const char*, 3> names{"grad", "curl", "div"};
    std::string out;
    const auto& idx = w.indices();
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
        if (!out.empty()) out += "∘";
        out += names[static_cast<std::size_t>(*it - 1)];
    }
    return out;
}

}  // namespace nabla
