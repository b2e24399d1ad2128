#include "nabla/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "nabla/errors.hpp"

namespace nabla {

namespace {

unsigned degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

// Descending graded-lex: higher total degree first, then lexicographically
// larger exponent vector first.
bool graded_lex_greater(const Exponents& a, const Exponents& b) {
    const unsigned da = degree_of(a), db = degree_of(b);
    if (da != db) return da > db;
    return a > b;
}

class Parser {
public:
    Parser(std::string_view text, int n_vars) : text_(text), n_vars_(n_vars) {}

    Polynomial run() {
        Polynomial result(n_vars_);
        skip_space();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            Rational sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            Polynomial term = parse_term();
            term *= sign;
            result += term;
            skip_space();
        }
        return result;
    }

private:
    Polynomial parse_term() {
        Rational coeff = 1;
        Exponents exps(static_cast<std::size_t>(n_vars_), 0);
        parse_factor(coeff, exps);
        skip_space();
        while (!at_end() && peek() == '*') {
            ++pos_;
            skip_space();
            parse_factor(coeff, exps);
            skip_space();
        }
        return Polynomial::monomial(exps, coeff);
    }

    void parse_factor(Rational& coeff, Exponents& exps) {
        if (at_end()) fail("unexpected end of input");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Rational value(read_digits());
            if (!at_end() && peek() == '/') {
                ++pos_;
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
                BigInt den(read_digits());
                if (den == 0) fail("zero denominator");
                value /= Rational(den);
            }
            coeff *= value;
            return;
        }
        if (peek() == 'x') {
            ++pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index after 'x'");
            const std::string idx = read_digits();
            const long var = idx.size() > 6 ? -1 : std::stol(idx);
            if (var < 1 || var > n_vars_) {
                fail("variable x" + idx + " outside x1..x" + std::to_string(n_vars_));
            }
            unsigned power = 1;
            skip_space();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_space();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
                const std::string p = read_digits();
                if (p.size() > 6) fail("exponent too large");
                power = static_cast<unsigned>(std::stoul(p));
            }
            exps[static_cast<std::size_t>(var - 1)] += power;
            return;
        }
        fail(std::string("unexpected character '") + peek() + "'");
    }

    std::string read_digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg +
                         " in \"" + std::string(text_) + "\"");
    }

    std::string_view text_;
    int n_vars_;
    std::size_t pos_ = 0;
};

void collect_monomials(int n_vars, int var, int remaining, Exponents& current,
                       std::vector<Exponents>& out) {
    if (var == n_vars - 1) {
        current[static_cast<std::size_t>(var)] = static_cast<unsigned>(remaining);
        out.push_back(current);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        current[static_cast<std::size_t>(var)] = static_cast<unsigned>(e);
        collect_monomials(n_vars, var + 1, remaining - e, current, out);
    }
}

}  // namespace

Polynomial::Polynomial(int n_vars) : n_vars_(n_vars) {
    if (n_vars < 1) throw DomainError("polynomial needs at least one variable");
}

Polynomial Polynomial::constant(int n_vars, const Rational& c) {
    Polynomial p(n_vars);
    p.add_term(Exponents(static_cast<std::size_t>(n_vars), 0), c);
    return p;
}

Polynomial Polynomial::variable(int n_vars, int var) {
    if (var < 1 || var > n_vars) throw DomainError("variable index out of range");
    Exponents e(static_cast<std::size_t>(n_vars), 0);
    e[static_cast<std::size_t>(var - 1)] = 1;
    return monomial(e);
}

Polynomial Polynomial::monomial(const Exponents& exps, const Rational& c) {
    Polynomial p(static_cast<int>(exps.size()));
    p.add_term(exps, c);
    return p;
}

Polynomial Polynomial::parse(std::string_view text, int n_vars) { return Parser(text, n_vars).run(); }

Rational Polynomial::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(degree_of(e)));
    return d;
}

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != n_vars_) {
        throw StructuralError("exponent vector length does not match variable count");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 1 || var > n_vars_) throw DomainError("variable index out of range");
    const auto slot = static_cast<std::size_t>(var - 1);
    Polynomial out(n_vars_);
    for (const auto& [e, c] : terms_) {
        if (e[slot] == 0) continue;
        Exponents d = e;
        --d[slot];
        out.add_term(d, c * e[slot]);
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Exponents, Rational>*> ordered;
    for (const auto& t : terms_) ordered.push_back(&t);
    std::sort(ordered.begin(), ordered.end(),
              [](auto* a, auto* b) { return graded_lex_greater(a->first, b->first); });
    std::string out;
    for (const auto* t : ordered) {
        const Rational& c = t->second;
        const Rational mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string factors;
        for (std::size_t v = 0; v < t->first.size(); ++v) {
            const unsigned e = t->first[v];
            if (e == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += "x" + std::to_string(v + 1);
            if (e > 1) factors += "^" + std::to_string(e);
        }
        if (factors.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += factors;
        } else {
            out += mag.get_str() + "*" + factors;
        }
    }
    return out;
}

void Polynomial::check_compatible(const Polynomial& other) const {
    if (other.n_vars_ != n_vars_) {
        throw StructuralError("polynomials over different variable counts (" + std::to_string(n_vars_) +
                              " vs " + std::to_string(other.n_vars_) + ")");
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_compatible(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    check_compatible(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    p *= Rational(-1);
    return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.n_vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e = ea;
            for (std::size_t v = 0; v < e.size(); ++v) e[v] += eb[v];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

std::vector<Exponents> monomials_of_degree(int n_vars, int degree) {
    std::vector<Exponents> out;
    Exponents current(static_cast<std::size_t>(n_vars), 0);
    collect_monomials(n_vars, 0, degree, current, out);
    return out;
}

}  // namespace nabla
