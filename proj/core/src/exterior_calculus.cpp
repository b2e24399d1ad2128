#include "nabla/exterior_calculus.hpp"

#include <algorithm>

#include "nabla/errors.hpp"

namespace nabla {

namespace {

void collect_subsets(int n, int size, int start, IndexSet& current, std::vector<IndexSet>& out) {
    if (static_cast<int>(current.size()) == size) {
        out.push_back(current);
        return;
    }
    for (int v = start; v <= n - (size - static_cast<int>(current.size())) + 1; ++v) {
        current.push_back(v);
        collect_subsets(n, size, v + 1, current, out);
        current.pop_back();
    }
}

void check_level(Dimension n, int level) {
    if (level < 0 || level > n.m()) {
        throw DomainError("component level " + std::to_string(level) + " outside 0.." +
                          std::to_string(n.m()));
    }
}

}  // namespace

std::vector<IndexSet> index_subsets(int n, int size) {
    std::vector<IndexSet> out;
    if (size < 0 || size > n) return out;
    IndexSet current;
    collect_subsets(n, size, 1, current, out);
    return out;
}

IndexSet complement(const IndexSet& s, int n) {
    IndexSet out;
    for (int v = 1; v <= n; ++v) {
        if (!std::binary_search(s.begin(), s.end(), v)) out.push_back(v);
    }
    return out;
}

int complement_sign(const IndexSet& s, int n) {
    // Inversions of (s, complement): pairs (a in s, b in complement) with a > b.
    const IndexSet t = complement(s, n);
    long inversions = 0;
    for (int a : s) {
        inversions += std::count_if(t.begin(), t.end(), [a](int b) { return b < a; });
    }
    return inversions % 2 == 0 ? 1 : -1;
}

// --- DifferentialForm ------------------------------------------------------

DifferentialForm::DifferentialForm(Dimension n, int degree) : n_(n), degree_(degree) {
    if (degree < 0 || degree > n.n()) {
        throw DomainError("form degree " + std::to_string(degree) + " outside 0.." + std::to_string(n.n()));
    }
}

void DifferentialForm::check_key(const IndexSet& s) const {
    const bool ok = static_cast<int>(s.size()) == degree_ &&
                    std::is_sorted(s.begin(), s.end()) &&
                    std::adjacent_find(s.begin(), s.end()) == s.end() &&
                    (s.empty() || (s.front() >= 1 && s.back() <= n_.n()));
    if (!ok) throw StructuralError("basis index set is not an ascending subset of the right size");
}

Polynomial DifferentialForm::component(const IndexSet& s) const {
    check_key(s);
    auto it = components_.find(s);
    return it == components_.end() ? Polynomial(n_.n()) : it->second;
}

void DifferentialForm::add(const IndexSet& s, const Polynomial& p) {
    check_key(s);
    if (p.n_vars() != n_.n()) {
        throw StructuralError("component polynomial has " + std::to_string(p.n_vars()) +
                              " variables, form lives on R^" + std::to_string(n_.n()));
    }
    if (p.is_zero()) return;
    auto [it, inserted] = components_.try_emplace(s, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) components_.erase(it);
    }
}

std::string DifferentialForm::to_string() const {
    if (components_.empty()) return "0";
    std::string out;
    for (const auto& [s, p] : components_) {
        if (!out.empty()) out += " + ";
        out += "(" + p.to_string() + ")";
        if (!s.empty()) {
            out += " ";
            for (std::size_t t = 0; t < s.size(); ++t) {
                if (t) out += "^";
                out += "dx" + std::to_string(s[t]);
            }
        }
    }
    return out;
}

// --- ComponentVector -------------------------------------------------------

ComponentVector::ComponentVector(Dimension n, int level, std::vector<Polynomial> entries)
    : n_(n), level_(level), entries_(std::move(entries)) {
    check_level(n, level);
    const auto expected = index_subsets(n.n(), level).size();
    if (entries_.size() != expected) {
        throw StructuralError("level " + std::to_string(level) + " on R^" + std::to_string(n.n()) +
                              " needs " + std::to_string(expected) + " entries, got " +
                              std::to_string(entries_.size()));
    }
    for (const auto& p : entries_) {
        if (p.n_vars() != n.n()) throw StructuralError("entry polynomial has wrong variable count");
    }
}

ComponentVector ComponentVector::zero(Dimension n, int level) {
    check_level(n, level);
    return ComponentVector(n, level,
                           std::vector<Polynomial>(index_subsets(n.n(), level).size(), Polynomial(n.n())));
}

bool ComponentVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::string ComponentVector::to_string() const {
    std::string out = "[";
    for (std::size_t t = 0; t < entries_.size(); ++t) {
        if (t) out += ", ";
        out += entries_[t].to_string();
    }
    return out + "]";
}

ComponentVector& ComponentVector::operator+=(const ComponentVector& other) {
    if (other.n_ != n_ || other.level_ != level_) throw StructuralError("component vectors differ in shape");
    for (std::size_t t = 0; t < entries_.size(); ++t) entries_[t] += other.entries_[t];
    return *this;
}

ComponentVector& ComponentVector::operator*=(const Rational& s) {
    for (auto& p : entries_) p *= s;
    return *this;
}

// --- levels ----------------------------------------------------------------

int level_of_degree(int degree, Dimension n) { return std::min(degree, n.n() - degree); }

int domain_level(int i, Dimension n) {
    check_operator_index(i, n);
    return std::min(i - 1, n.n() - i + 1);
}

int codomain_level(int i, Dimension n) {
    check_operator_index(i, n);
    return std::min(i, n.n() - i);
}

// --- operators -------------------------------------------------------------

DifferentialForm exterior_derivative(const DifferentialForm& form) {
    const Dimension n = form.dimension();
    if (form.degree() == n.n()) return DifferentialForm(n, n.n());
    DifferentialForm out(n, form.degree() + 1);
    for (const auto& [s, g] : form.components()) {
        for (int t = 1; t <= n.n(); ++t) {
            if (std::binary_search(s.begin(), s.end(), t)) continue;
            Polynomial partial = g.derivative(t);
            if (partial.is_zero()) continue;
            // dx_t ^ dx_S reordered: one transposition per element of S below t.
            const auto below = std::count_if(s.begin(), s.end(), [t](int v) { return v < t; });
            if (below % 2 != 0) partial *= Rational(-1);
            IndexSet key = s;
            key.insert(std::upper_bound(key.begin(), key.end(), t), t);
            out.add(key, partial);
        }
    }
    return out;
}

ComponentVector iso_to_components(const DifferentialForm& form) {
    const Dimension n = form.dimension();
    const int degree = form.degree();
    if (degree <= n.m()) {
        std::vector<Polynomial> entries;
        for (const auto& s : index_subsets(n.n(), degree)) entries.push_back(form.component(s));
        return ComponentVector(n, degree, std::move(entries));
    }
    const int level = n.n() - degree;
    std::vector<Polynomial> entries;
    for (const auto& s : index_subsets(n.n(), level)) {
        Polynomial p = form.component(complement(s, n.n()));
        if (complement_sign(s, n.n()) < 0) p *= Rational(-1);
        entries.push_back(std::move(p));
    }
    return ComponentVector(n, level, std::move(entries));
}

DifferentialForm iso_from_components(const ComponentVector& v, int target_degree) {
    const Dimension n = v.dimension();
    const int level = v.level();
    const bool low = target_degree == level && level <= n.m();
    const bool high = target_degree == n.n() - level && n.n() - level > n.m();
    if (!low && !high) {
        throw DomainError("cannot lift level " + std::to_string(level) + " to a form of degree " +
                          std::to_string(target_degree) + " on R^" + std::to_string(n.n()));
    }
    DifferentialForm out(n, target_degree);
    const auto slots = index_subsets(n.n(), level);
    for (std::size_t t = 0; t < slots.size(); ++t) {
        if (low) {
            out.add(slots[t], v.entries()[t]);
        } else {
            Polynomial p = v.entries()[t];
            if (complement_sign(slots[t], n.n()) < 0) p *= Rational(-1);
            out.add(complement(slots[t], n.n()), p);
        }
    }
    return out;
}

ComponentVector apply_nabla(int i, const ComponentVector& v) {
    const Dimension n = v.dimension();
    const int expected = domain_level(i, n);
    if (v.level() != expected) throw UndefinedCompositionError(0, i, expected, v.level());
    const DifferentialForm lifted = iso_from_components(v, i - 1);
    return iso_to_components(exterior_derivative(lifted));
}

ComponentVector apply_word(const CompositionWord& w, const ComponentVector& v) {
    if (w.dimension() != v.dimension()) throw StructuralError("word and input live on different R^n");
    if (auto bad = w.first_undefined_pair()) {
        throw UndefinedCompositionError(bad->first, bad->second, domain_level(bad->second, w.dimension()),
                                        codomain_level(bad->first, w.dimension()));
    }
    const int first = w.indices().front();
    if (v.level() != domain_level(first, w.dimension())) {
        throw DomainError("input at level " + std::to_string(v.level()) + " but nabla_" +
                          std::to_string(first) + " expects level " +
                          std::to_string(domain_level(first, w.dimension())));
    }
    ComponentVector current = v;
    for (int i : w.indices()) current = apply_nabla(i, current);
    return current;
}

bool is_zero_operator(const CompositionWord& w) {
    if (auto bad = w.first_undefined_pair()) {
        throw UndefinedCompositionError(bad->first, bad->second, domain_level(bad->second, w.dimension()),
                                        codomain_level(bad->first, w.dimension()));
    }
    const Dimension n = w.dimension();
    const int level = domain_level(w.indices().front(), n);
    const std::size_t slots = index_subsets(n.n(), level).size();
    const int max_degree = static_cast<int>(w.length());
    for (int degree = 0; degree <= max_degree; ++degree) {
        for (const auto& exps : monomials_of_degree(n.n(), degree)) {
            for (std::size_t slot = 0; slot < slots; ++slot) {
                ComponentVector probe = ComponentVector::zero(n, level);
                std::vector<Polynomial> entries = probe.entries();
                entries[slot] = Polynomial::monomial(exps);
                if (!apply_word(w, ComponentVector(n, level, std::move(entries))).is_zero()) return false;
            }
        }
    }
    return true;
}

}  // namespace nabla
