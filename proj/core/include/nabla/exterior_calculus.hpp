#pragma once

#include <map>
#include <string>
#include <vector>

#include "nabla/composition_graph.hpp"
#include "nabla/composition_word.hpp"
#include "nabla/polynomial.hpp"

namespace nabla {

/// Strictly ascending 1-based index subset, e.g. {1, 3} for dx1^dx3.
using IndexSet = std::vector<int>;

/// All size-`size` subsets of {1..n} in lexicographic order.
std::vector<IndexSet> index_subsets(int n, int size);

/// Complement of s in {1..n}, ascending.
IndexSet complement(const IndexSet& s, int n);

/// Sign of the permutation that sorts (s ascending, complement ascending)
/// into (1..n).
int complement_sign(const IndexSet& s, int n);

/// Polynomial differential form of a single degree on R^n. Absent
/// components are zero; zero components are never stored.
class DifferentialForm {
public:
    DifferentialForm(Dimension n, int degree);

    Dimension dimension() const noexcept { return n_; }
    int degree() const noexcept { return degree_; }
    const std::map<IndexSet, Polynomial>& components() const noexcept { return components_; }

    /// Coefficient of dx_S; zero when absent.
    Polynomial component(const IndexSet& s) const;
    /// Adds `p` to the coefficient of dx_S.
    void add(const IndexSet& s, const Polynomial& p);

    bool is_zero() const noexcept { return components_.empty(); }

    /// "(x2) dx1 + (x1) dx2"; "0" for the zero form.
    std::string to_string() const;

    friend bool operator==(const DifferentialForm&, const DifferentialForm&) = default;

private:
    void check_key(const IndexSet& s) const;

    Dimension n_;
    int degree_;
    std::map<IndexSet, Polynomial> components_;
};

/// Element of A_level: C(n, level) polynomials in lexicographic slot order.
class ComponentVector {
public:
    ComponentVector(Dimension n, int level, std::vector<Polynomial> entries);
    static ComponentVector zero(Dimension n, int level);

    Dimension dimension() const noexcept { return n_; }
    int level() const noexcept { return level_; }
    const std::vector<Polynomial>& entries() const noexcept { return entries_; }
    bool is_zero() const;

    /// "[x2, x1, 0]"
    std::string to_string() const;

    ComponentVector& operator+=(const ComponentVector& other);
    ComponentVector& operator*=(const Rational& s);
    friend ComponentVector operator+(ComponentVector a, const ComponentVector& b) { return a += b; }
    friend ComponentVector operator*(const Rational& s, ComponentVector a) { return a *= s; }
    friend bool operator==(const ComponentVector&, const ComponentVector&) = default;

private:
    Dimension n_;
    int level_;
    std::vector<Polynomial> entries_;
};

/// Level of A_i that Omega^degree maps onto: min(degree, n - degree).
int level_of_degree(int degree, Dimension n);
/// Domain level of nabla_i: min(i - 1, n - i + 1).
int domain_level(int i, Dimension n);
/// Codomain level of nabla_i: min(i, n - i).
int codomain_level(int i, Dimension n);

/// d on polynomial forms. The top-degree form maps to the zero form of
/// degree n.
DifferentialForm exterior_derivative(const DifferentialForm& form);

/// Identification Omega^degree -> A_level. Degrees <= m copy coefficients;
/// higher degrees send dx_T to slot complement(T) with complement_sign.
ComponentVector iso_to_components(const DifferentialForm& form);

/// Inverse of iso_to_components. target_degree must be level (when
/// level <= m) or n - level (when n - level > m).
DifferentialForm iso_from_components(const ComponentVector& v, int target_degree);

/// nabla_i = phi_i . d . phi_{i-1}^{-1}. Throws UndefinedCompositionError when
/// v is not at the domain level of nabla_i (previous index reported as 0).
ComponentVector apply_nabla(int i, const ComponentVector& v);

/// Folds nabla over the word in application order. Throws
/// UndefinedCompositionError naming the first non-composable pair, or
/// DomainError when v is not at the first operator's domain level.
ComponentVector apply_word(const CompositionWord& w, const ComponentVector& v);

/// True iff the composed operator annihilates every input. Probes every
/// slot with every monomial of total degree <= length(w); since the
/// composition is a constant-coefficient operator of order length(w), this
/// finite family decides it.
bool is_zero_operator(const CompositionWord& w);

}  // namespace nabla
