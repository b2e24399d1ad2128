#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nabla/bigint.hpp"

namespace nabla {

/// Exponent vector of a monomial x1^e1 ... xn^en.
using Exponents = std::vector<unsigned>;

/// Multivariate polynomial in x1..x_{n_vars} with exact rational
/// coefficients. Zero coefficients are never stored, so structural equality
/// is mathematical equality.
class Polynomial {
public:
    explicit Polynomial(int n_vars);
    static Polynomial constant(int n_vars, const Rational& c);
    /// x_var, 1-based.
    static Polynomial variable(int n_vars, int var);
    static Polynomial monomial(const Exponents& exps, const Rational& c = 1);

    /// Parses "3/2*x1^2*x3 - x2"; variables beyond n_vars are rejected.
    static Polynomial parse(std::string_view text, int n_vars);

    int n_vars() const noexcept { return n_vars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
    Rational coefficient(const Exponents& exps) const;
    /// -1 for the zero polynomial.
    int total_degree() const;

    void add_term(const Exponents& exps, const Rational& c);

    /// Partial derivative with respect to x_var (1-based), exact power rule.
    Polynomial derivative(int var) const;

    /// Terms in descending graded-lex order; "0" for the zero polynomial.
    std::string to_string() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& s);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void check_compatible(const Polynomial& other) const;

    int n_vars_;
    std::map<Exponents, Rational> terms_;
};

/// All exponent vectors in n_vars variables with total degree exactly `degree`.
std::vector<Exponents> monomials_of_degree(int n_vars, int degree);

}  // namespace nabla
