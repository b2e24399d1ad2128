#include "nabla/recurrence.hpp"

#include <algorithm>
#include <string>

#include "nabla/errors.hpp"

namespace nabla {

// --- IntegerPolynomial -----------------------------------------------------

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
    trim();
}

void IntegerPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntegerPolynomial::coefficient(int power) const {
    if (power < 0 || power > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(power)];
}

const BigInt& IntegerPolynomial::leading() const {
    if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

int IntegerPolynomial::zero_root_multiplicity() const {
    int v = 0;
    while (v <= degree() && coeffs_[static_cast<std::size_t>(v)] == 0) ++v;
    return v;
}

std::string IntegerPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int p = degree(); p >= 0; --p) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(p)];
        if (c == 0) continue;
        const BigInt mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const bool show_coeff = mag != 1 || p == 0;
        if (show_coeff) out += mag.get_str();
        if (p > 0) {
            if (show_coeff) out += "*";
            out += var;
            if (p > 1) out += "^" + std::to_string(p);
        }
    }
    return out;
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntegerPolynomial(std::move(out));
}

IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return IntegerPolynomial(std::move(out));
}

IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return IntegerPolynomial(std::move(out));
}

std::pair<IntegerPolynomial, IntegerPolynomial> divide_monic(const IntegerPolynomial& dividend,
                                                             const IntegerPolynomial& divisor) {
    if (!divisor.is_monic()) throw DomainError("divisor must be monic");
    std::vector<BigInt> rem = dividend.coefficients();
    const int dd = divisor.degree();
    if (dividend.degree() < dd) return {IntegerPolynomial{}, dividend};
    std::vector<BigInt> quot(static_cast<std::size_t>(dividend.degree() - dd + 1), 0);
    for (int p = dividend.degree(); p >= dd; --p) {
        const BigInt c = rem[static_cast<std::size_t>(p)];
        if (c == 0) continue;
        quot[static_cast<std::size_t>(p - dd)] = c;
        for (int t = 0; t <= dd; ++t) {
            rem[static_cast<std::size_t>(p - dd + t)] -= c * divisor.coefficient(t);
        }
    }
    return {IntegerPolynomial(std::move(quot)), IntegerPolynomial(std::move(rem))};
}

// --- IntegerMatrix ---------------------------------------------------------

IntegerMatrix::IntegerMatrix(int size)
    : size_(size), data_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0) {
    if (size < 1) throw DomainError("matrix size must be positive");
}

IntegerMatrix IntegerMatrix::identity(int size) {
    IntegerMatrix m(size);
    for (int i = 0; i < size; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from(const AdjacencyMatrix& a) {
    IntegerMatrix m(a.size());
    for (int i = 1; i <= a.size(); ++i) {
        for (int j = 1; j <= a.size(); ++j) m(i - 1, j - 1) = a(i, j) ? 1 : 0;
    }
    return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.size() != b.size()) throw StructuralError("matrix size mismatch");
    const int n = a.size();
    IntegerMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < n; ++j) out(i, j) += a(i, k) * b(k, j);
        }
    }
    return out;
}

// --- characteristic polynomial ---------------------------------------------

IntegerPolynomial characteristic_polynomial(const IntegerMatrix& a) {
    // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
    const int n = a.size();
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, 0);
    c[static_cast<std::size_t>(n)] = 1;
    IntegerMatrix m(n);
    for (int k = 1; k <= n; ++k) {
        IntegerMatrix next = a * m;
        for (int i = 0; i < n; ++i) next(i, i) += c[static_cast<std::size_t>(n - k + 1)];
        m = std::move(next);
        const IntegerMatrix am = a * m;
        BigInt trace = 0;
        for (int i = 0; i < n; ++i) trace += am(i, i);
        BigInt q;
        mpz_divexact_ui(q.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
        c[static_cast<std::size_t>(n - k)] = -q;
    }
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial characteristic_polynomial(const AdjacencyMatrix& a) {
    return characteristic_polynomial(IntegerMatrix::from(a));
}

// --- recurrences -----------------------------------------------------------

IntegerPolynomial Recurrence::characteristic_polynomial() const {
    const int d = order();
    std::vector<BigInt> c(static_cast<std::size_t>(d) + 1, 0);
    c[static_cast<std::size_t>(d)] = 1;
    for (int t = 1; t <= d; ++t) c[static_cast<std::size_t>(d - t)] = -coefficients[static_cast<std::size_t>(t - 1)];
    return IntegerPolynomial(std::move(c));
}

std::string Recurrence::to_string() const {
    const int d = order();
    auto term = [](int shift) {
        return shift == 0 ? std::string("f(i)") : "f(i+" + std::to_string(shift) + ")";
    };
    std::string rhs;
    for (int t = 1; t <= d; ++t) {
        const BigInt& c = coefficients[static_cast<std::size_t>(t - 1)];
        if (c == 0) continue;
        const BigInt mag = abs(c);
        if (rhs.empty()) {
            if (c < 0) rhs += "-";
        } else {
            rhs += c < 0 ? " - " : " + ";
        }
        if (mag != 1) rhs += mag.get_str() + " ";
        rhs += term(d - t);
    }
    if (rhs.empty()) rhs = "0";
    return term(d) + "=" + rhs;
}

Recurrence recurrence_from_polynomial(const IntegerPolynomial& p) {
    if (!p.is_monic()) throw DomainError("characteristic polynomial must be monic");
    const int d = p.degree();
    Recurrence r;
    r.coefficients.reserve(static_cast<std::size_t>(d));
    for (int t = 1; t <= d; ++t) r.coefficients.push_back(-p.coefficient(d - t));
    r.valid_from = d + 1;
    return r;
}

Recurrence minimal_recurrence(const std::vector<BigInt>& terms, int max_order) {
    // Berlekamp-Massey over Q. Connection polynomial C(x) = 1 + C_1 x + ...
    // with s_j + sum_t C_t s_{j-t} = 0 for j >= L (0-based).
    const std::size_t len = terms.size();
    std::vector<Rational> conn{1}, prev{1};
    int length = 0;
    int shift = 1;
    Rational prev_disc = 1;
    for (std::size_t j = 0; j < len; ++j) {
        Rational disc = terms[j];
        for (int t = 1; t <= length && t < static_cast<int>(conn.size()); ++t) {
            disc += conn[static_cast<std::size_t>(t)] * terms[j - static_cast<std::size_t>(t)];
        }
        if (disc == 0) {
            ++shift;
            continue;
        }
        const Rational factor = disc / prev_disc;
        std::vector<Rational> updated = conn;
        if (updated.size() < prev.size() + static_cast<std::size_t>(shift)) {
            updated.resize(prev.size() + static_cast<std::size_t>(shift), 0);
        }
        for (std::size_t t = 0; t < prev.size(); ++t) updated[t + static_cast<std::size_t>(shift)] -= factor * prev[t];
        if (2 * length <= static_cast<int>(j)) {
            prev = conn;
            length = static_cast<int>(j) + 1 - length;
            prev_disc = disc;
            shift = 1;
        } else {
            ++shift;
        }
        conn = std::move(updated);
    }
    while (conn.size() > 1 && conn.back() == 0) conn.pop_back();

    if (length > max_order) {
        throw InconsistencyError("no linear recurrence of order <= " + std::to_string(max_order) +
                                 " fits the sequence (minimal length " + std::to_string(length) + ")");
    }
    if (2 * length > static_cast<int>(len)) {
        throw InconsistencyError("sequence too short to certify a recurrence of order " +
                                 std::to_string(length));
    }
    const int d = static_cast<int>(conn.size()) - 1;
    if (d == 0) throw InconsistencyError("sequence is eventually zero; no recurrence of positive order");

    Recurrence r;
    r.valid_from = length + 1;
    for (int t = 1; t <= d; ++t) {
        const Rational c = -conn[static_cast<std::size_t>(t)];
        if (c.get_den() != 1) {
            throw InconsistencyError("minimal recurrence has non-integer coefficient " + c.get_str());
        }
        r.coefficients.push_back(c.get_num());
    }
    // Re-verify against every term.
    for (int k = std::max(r.valid_from, d + 1); k <= static_cast<int>(len); ++k) {
        BigInt rhs = 0;
        for (int t = 1; t <= d; ++t) rhs += r.coefficients[static_cast<std::size_t>(t - 1)] * terms[static_cast<std::size_t>(k - t - 1)];
        if (rhs != terms[static_cast<std::size_t>(k - 1)]) {
            throw InconsistencyError("fitted recurrence fails at k = " + std::to_string(k));
        }
    }
    return r;
}

Recurrence minimal_recurrence(const CountSequence& seq) {
    const int n = seq.dimension().n();
    if (seq.k_max() < 2 * n + 4) {
        throw DomainError("minimal_recurrence needs at least " + std::to_string(2 * n + 4) +
                          " terms, got " + std::to_string(seq.k_max()));
    }
    return minimal_recurrence(seq.values(), n);
}

bool verify_recurrence(const Recurrence& r, const CountSequence& seq) {
    const int d = r.order();
    const int first = std::max(r.valid_from, d + 1);
    if (first > seq.k_max()) {
        throw DomainError("sequence of " + std::to_string(seq.k_max()) +
                          " terms offers no index to test (first is " + std::to_string(first) + ")");
    }
    for (int k = first; k <= seq.k_max(); ++k) {
        BigInt rhs = 0;
        for (int t = 1; t <= d; ++t) rhs += r.coefficients[static_cast<std::size_t>(t - 1)] * seq.at(k - t);
        if (rhs != seq.at(k)) return false;
    }
    return true;
}

const std::map<int, Recurrence>& paper_reference_table() {
    auto row = [](std::vector<long> c) {
        Recurrence r;
        for (long v : c) r.coefficients.emplace_back(v);
        r.valid_from = r.order() + 1;
        return r;
    };
    static const std::map<int, Recurrence> table{
        {3, row({1, 1})},                  // f(i+2)=f(i+1)+f(i)
        {4, row({0, 2})},                  // f(i+2)=2 f(i)
        {5, row({1, 2, -1})},              // f(i+3)=f(i+2)+2 f(i+1)-f(i)
        {6, row({0, 3, 0, -1})},           // f(i+4)=3 f(i+2)-f(i)
        {7, row({0, 1, 3, -2, -1})},       // f(i+5)=f(i+3)+3 f(i+2)-2 f(i+1)-f(i)
        {8, row({4, 0, 0, -3})},           // f(i+4)=4 f(i+3)-3 f(i)
        {9, row({1, 4, -3, -3, 1})},       // f(i+5)=f(i+4)+4 f(i+3)-3 f(i+2)-3 f(i+1)+f(i)
        {10, row({0, 5, 0, -6, 0, 1})},    // f(i+6)=5 f(i+4)-6 f(i+2)+f(i)
    };
    return table;
}

}  // namespace nabla
