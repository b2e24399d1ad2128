#pragma once

#include <stdexcept>
#include <string>

namespace nabla {

/// Argument outside the range the operation is defined on (n < 3, index
/// out of 1..n, non-monic polynomial, level mismatch, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A materializing operation would exceed its configured cap.
class CapacityError : public std::runtime_error {
public:
    CapacityError(const std::string& what, unsigned long long cap)
        : std::runtime_error(what), cap_(cap) {}
    unsigned long long cap() const noexcept { return cap_; }

private:
    unsigned long long cap_;
};

/// Computed data contradicts itself (e.g. no recurrence of admissible order
/// fits a count sequence).
class InconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mixed dimensions inside one form or vector.
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed textual input (polynomial syntax, word lists, ...).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The nowhere-defined composition: operator `next` cannot follow `previous`.
class UndefinedCompositionError : public DomainError {
public:
    UndefinedCompositionError(int previous, int next, int expected_level, int actual_level);

    int previous() const noexcept { return previous_; }
    int next() const noexcept { return next_; }
    /// Level the next operator accepts, and the level that was supplied.
    int expected_level() const noexcept { return expected_level_; }
    int actual_level() const noexcept { return actual_level_; }

private:
    int previous_;
    int next_;
    int expected_level_;
    int actual_level_;
};

}  // namespace nabla
