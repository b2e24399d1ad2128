#pragma once

#include <string_view>
#include <vector>

#include "nabla/bigint.hpp"
#include "nabla/composition_word.hpp"

namespace nabla {

enum class TrivialityClass { Zero, NonTrivial, Undefined };

std::string_view to_string(TrivialityClass c);

/// Class of nabla_j . nabla_k (k applied first): Zero if j = k + 1, else
/// NonTrivial if k + j = n + 1, else Undefined.
TrivialityClass classify_pair(int k, int j, Dimension n);

/// Undefined if any consecutive pair is; else Zero if any pair is; else
/// NonTrivial. Single operators are NonTrivial.
TrivialityClass classify_word(const CompositionWord& w);

/// Non-trivial words of the given length, ascending by starting index.
/// Length 1 yields all n operators; longer words alternate k, n+1-k, ...
/// and exist only when every consecutive pair is non-trivial.
std::vector<CompositionWord> enumerate_nontrivial(Dimension n, int length);

/// Number of words enumerate_nontrivial returns, in closed form (length >= 2).
BigInt count_nontrivial(Dimension n, int length);

}  // namespace nabla
