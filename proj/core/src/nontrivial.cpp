#include "nabla/nontrivial.hpp"

#include <string>

#include "nabla/errors.hpp"

namespace nabla {

std::string_view to_string(TrivialityClass c) {
    switch (c) {
        case TrivialityClass::Zero: return "Zero";
        case TrivialityClass::NonTrivial: return "NonTrivial";
        case TrivialityClass::Undefined: return "Undefined";
    }
    return "?";
}

TrivialityClass classify_pair(int k, int j, Dimension n) {
    check_operator_index(k, n);
    check_operator_index(j, n);
    if (j == k + 1) return TrivialityClass::Zero;
    // k + j = n + 1 together with j = k + 1 forces 2k = n, handled above.
    if (k + j == n.n() + 1) return TrivialityClass::NonTrivial;
    return TrivialityClass::Undefined;
}

TrivialityClass classify_word(const CompositionWord& w) {
    const auto& idx = w.indices();
    bool zero = false;
    for (std::size_t t = 0; t + 1 < idx.size(); ++t) {
        switch (classify_pair(idx[t], idx[t + 1], w.dimension())) {
            case TrivialityClass::Undefined: return TrivialityClass::Undefined;
            case TrivialityClass::Zero: zero = true; break;
            case TrivialityClass::NonTrivial: break;
        }
    }
    return zero ? TrivialityClass::Zero : TrivialityClass::NonTrivial;
}

std::vector<CompositionWord> enumerate_nontrivial(Dimension n, int length) {
    if (length < 1) throw DomainError("word length must be >= 1, got " + std::to_string(length));
    std::vector<CompositionWord> out;
    for (int k = 1; k <= n.n(); ++k) {
        const int j = n.n() + 1 - k;
        // First step k -> j needs 2k != n; the step back j -> k needs 2j != n.
        if (length >= 2 && 2 * k == n.n()) continue;
        if (length >= 3 && 2 * j == n.n()) continue;
        std::vector<int> word(static_cast<std::size_t>(length));
        for (int t = 0; t < length; ++t) word[static_cast<std::size_t>(t)] = t % 2 == 0 ? k : j;
        out.emplace_back(n, std::move(word));
    }
    return out;
}

BigInt count_nontrivial(Dimension n, int length) {
    if (length < 2) throw DomainError("count_nontrivial needs length >= 2, got " + std::to_string(length));
    if (n.n() % 2 == 1) return n.n();
    return length == 2 ? n.n() - 1 : n.n() - 2;
}

}  // namespace nabla
