#include "nabla/errors.hpp"

namespace nabla {

UndefinedCompositionError::UndefinedCompositionError(int previous, int next, int expected_level,
                                                     int actual_level)
    : DomainError("composition undefined: nabla_" + std::to_string(next) +
                  " cannot follow nabla_" + std::to_string(previous) + " (pair (" +
                  std::to_string(previous) + "," + std::to_string(next) +
                  ") is not composable; expected level " + std::to_string(expected_level) +
                  ", got " + std::to_string(actual_level) + ")"),
      previous_(previous),
      next_(next),
      expected_level_(expected_level),
      actual_level_(actual_level) {}

}  // namespace nabla
