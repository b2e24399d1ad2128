#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nabla/bigint.hpp"
#include "nabla/composition_graph.hpp"
#include "nabla/counting.hpp"

namespace nabla {

/// Dense univariate polynomial with integer coefficients, ascending by power.
/// Trailing zero coefficients are trimmed; the zero polynomial has no
/// coefficients and degree -1.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<BigInt> ascending);

    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Coefficient of lambda^power; zero beyond the degree.
    BigInt coefficient(int power) const;
    const BigInt& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    /// Multiplicity of the root 0.
    int zero_root_multiplicity() const;

    /// "λ^3 - λ^2 - λ"
    std::string to_string(const std::string& var = "λ") const;

    friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;
    friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b);

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Quotient and remainder of `dividend` by a monic `divisor`; exact over the
/// integers. Throws DomainError for a non-monic divisor.
std::pair<IntegerPolynomial, IntegerPolynomial> divide_monic(const IntegerPolynomial& dividend,
                                                             const IntegerPolynomial& divisor);

/// Square integer matrix, row-major.
class IntegerMatrix {
public:
    explicit IntegerMatrix(int size);
    static IntegerMatrix identity(int size);
    static IntegerMatrix from(const AdjacencyMatrix& a);

    int size() const noexcept { return size_; }
    BigInt& operator()(int row, int col) { return data_[index(row, col)]; }
    const BigInt& operator()(int row, int col) const { return data_[index(row, col)]; }

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

private:
    std::size_t index(int row, int col) const {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(size_) +
               static_cast<std::size_t>(col);
    }
    int size_;
    std::vector<BigInt> data_;  // 0-based
};

/// f(k) = c_1 f(k-1) + ... + c_d f(k-d), asserted for k >= valid_from.
struct Recurrence {
    std::vector<BigInt> coefficients;  // c_1 .. c_d
    int valid_from = 1;

    int order() const noexcept { return static_cast<int>(coefficients.size()); }

    /// lambda^d - c_1 lambda^(d-1) - ... - c_d
    IntegerPolynomial characteristic_polynomial() const;

    /// Tabular display, e.g. "f(i+4)=4 f(i+3) - 3 f(i)".
    std::string to_string() const;

    /// Same order and coefficients; valid_from is not compared.
    bool same_relation(const Recurrence& other) const { return coefficients == other.coefficients; }
};

/// Monic characteristic polynomial det(lambda I - A) = (-1)^n det(A - lambda I),
/// computed by the Faddeev-LeVerrier iteration with exact integer division.
IntegerPolynomial characteristic_polynomial(const IntegerMatrix& a);
IntegerPolynomial characteristic_polynomial(const AdjacencyMatrix& a);

/// Order-deg(p) recurrence with c_t = -coefficient(deg - t), valid from
/// k = deg + 1. Throws DomainError for a non-monic input.
Recurrence recurrence_from_polynomial(const IntegerPolynomial& p);

/// Shortest linear recurrence satisfied by every stored term, found by
/// Berlekamp-Massey over the rationals and cleared to integers. Requires at
/// least 2n + 4 terms; throws InconsistencyError when no recurrence of
/// order <= n fits or the fit is not integral.
Recurrence minimal_recurrence(const CountSequence& seq);

/// Lower-level entry point used by minimal_recurrence; `max_order` bounds the
/// admissible order.
Recurrence minimal_recurrence(const std::vector<BigInt>& terms, int max_order);

/// True iff r holds at every stored index k >= max(valid_from, order + 1).
/// Throws DomainError when the sequence offers no such index.
bool verify_recurrence(const Recurrence& r, const CountSequence& seq);

/// The n = 3..10 recurrences as printed in the source table, verbatim.
const std::map<int, Recurrence>& paper_reference_table();

}  // namespace nabla
