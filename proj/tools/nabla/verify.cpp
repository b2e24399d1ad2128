#include "verify.hpp"

#include <random>
#include <stdexcept>

#include "nabla/nabla.hpp"

namespace nabla::cli {

namespace {

BigInt fibonacci(int k) {
    BigInt a = 0, b = 1;
    for (int t = 0; t < k; ++t) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return a;
}

Polynomial random_polynomial(std::mt19937_64& rng, int n_vars) {
    std::uniform_int_distribution<int> exp(0, 3);
    std::uniform_int_distribution<int> num(1, 9);
    Polynomial p(n_vars);
    for (int t = 0; t < 4; ++t) {
        Exponents e(static_cast<std::size_t>(n_vars));
        for (auto& v : e) v = static_cast<unsigned>(exp(rng));
        p.add_term(e, Rational(num(rng)) * (rng() % 2 ? 1 : -1));
    }
    return p;
}

void counting_checks(std::vector<CheckResult>& out) {
    {
        CheckResult r{"counting.oracle_equality", true, "count_total == brute_force_count for n=3..6, k=1..10"};
        for (int n = 3; n <= 6 && r.passed; ++n) {
            for (int k = 1; k <= 10 && r.passed; ++k) {
                const BigInt a = count_total(Dimension(n), k), b = brute_force_count(Dimension(n), k);
                if (a != b) {
                    r = {r.name, false, "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                                            to_decimal(a) + " != " + to_decimal(b)};
                }
            }
        }
        out.push_back(r);
    }
    {
        CheckResult r{"counting.fibonacci", true, "f(k) == F(k+3) for n=3, k=1..30"};
        const auto seq = count_sequence(Dimension(3), 30);
        for (int k = 1; k <= 30 && r.passed; ++k) {
            if (seq.at(k) != fibonacci(k + 3)) r = {r.name, false, "k=" + std::to_string(k)};
        }
        out.push_back(r);
    }
}

void recurrence_checks(std::vector<CheckResult>& out) {
    const auto& table = paper_reference_table();
    for (const auto& [n, row] : table) {
        const auto seq = count_sequence(Dimension(n), 2 * n + 8);
        const Recurrence minimal = minimal_recurrence(seq);
        const bool same = minimal.same_relation(row);
        std::string detail = "minimal " + minimal.to_string();
        if (!same) {
            detail += " vs table " + row.to_string() +
                      (verify_recurrence(row, seq) ? " (table row holds, not minimal)"
                                                   : " (table row does not hold)");
        }
        out.push_back({"recurrence.table_row_n" + std::to_string(n), same, detail});
    }
    {
        CheckResult r{"recurrence.characteristic_annihilates", true,
                      "characteristic recurrence holds for k=n+1..n+20, n=3..12"};
        for (int n = 3; n <= 12 && r.passed; ++n) {
            const Dimension dim(n);
            const auto rec = recurrence_from_polynomial(characteristic_polynomial(build_adjacency(dim)));
            if (!verify_recurrence(rec, count_sequence(dim, 2 * n + 20))) r = {r.name, false, "n=" + std::to_string(n)};
        }
        out.push_back(r);
    }
    {
        CheckResult r{"recurrence.minimal_divides_characteristic", true, "n=3..12"};
        for (int n = 3; n <= 12 && r.passed; ++n) {
            const Dimension dim(n);
            const auto p = characteristic_polynomial(build_adjacency(dim));
            const auto m = minimal_recurrence(count_sequence(dim, 2 * n + 8));
            if (!divide_monic(p, m.characteristic_polynomial()).second.is_zero()) {
                r = {r.name, false, "n=" + std::to_string(n)};
            }
        }
        out.push_back(r);
    }
}

void calculus_checks(std::vector<CheckResult>& out) {
    std::mt19937_64 rng(20240611);
    {
        CheckResult r{"calculus.d_squared_zero", true, "d(d(w)) == 0 on random forms, n=3..6, every degree"};
        for (int n = 3; n <= 6 && r.passed; ++n) {
            const Dimension dim(n);
            for (int degree = 0; degree <= n && r.passed; ++degree) {
                for (int t = 0; t < 10 && r.passed; ++t) {
                    DifferentialForm w(dim, degree);
                    for (const auto& s : index_subsets(n, degree)) w.add(s, random_polynomial(rng, n));
                    if (!exterior_derivative(exterior_derivative(w)).is_zero()) {
                        r = {r.name, false, "n=" + std::to_string(n) + " form " + w.to_string()};
                    }
                }
            }
        }
        out.push_back(r);
    }
    {
        CheckResult r{"calculus.grad_curl_div", true, "nabla_1, nabla_2, nabla_3 on R^3 match grad, curl, div"};
        const Dimension three(3);
        for (int t = 0; t < 20 && r.passed; ++t) {
            const Polynomial f = random_polynomial(rng, 3);
            const Polynomial f1 = random_polynomial(rng, 3), f2 = random_polynomial(rng, 3),
                             f3 = random_polynomial(rng, 3);
            const ComponentVector field(three, 1, {f1, f2, f3});
            const bool grad = apply_nabla(1, ComponentVector(three, 0, {f})).entries() ==
                              std::vector<Polynomial>{f.derivative(1), f.derivative(2), f.derivative(3)};
            const bool curl = apply_nabla(2, field).entries() ==
                              std::vector<Polynomial>{f3.derivative(2) - f2.derivative(3),
                                                      f1.derivative(3) - f3.derivative(1),
                                                      f2.derivative(1) - f1.derivative(2)};
            const bool div = apply_nabla(3, field).entries() ==
                             std::vector<Polynomial>{f1.derivative(1) + f2.derivative(2) + f3.derivative(3)};
            if (!(grad && curl && div)) r = {r.name, false, "input " + field.to_string()};
        }
        out.push_back(r);
    }
    {
        CheckResult r{"calculus.triviality_concordance", true,
                      "is_zero_operator == (classify_word == Zero), n=3..5, length<=4"};
        int words = 0;
        for (int n = 3; n <= 5 && r.passed; ++n) {
            for (int len = 1; len <= 4 && r.passed; ++len) {
                for (const auto& w : enumerate_words(Dimension(n), len)) {
                    ++words;
                    if (is_zero_operator(w) != (classify_word(w) == TrivialityClass::Zero)) {
                        r = {r.name, false, "n=" + std::to_string(n) + " word " + render_application_order(w)};
                        break;
                    }
                }
            }
        }
        if (r.passed) r.detail += " (" + std::to_string(words) + " words)";
        out.push_back(r);
    }
}

}  // namespace

std::vector<CheckResult> run_checks(const std::string& scope) {
    std::vector<CheckResult> out;
    const bool all = scope == "all";
    if (!all && scope != "counting" && scope != "recurrence" && scope != "calculus") {
        throw std::invalid_argument("unknown scope '" + scope + "'");
    }
    if (all || scope == "counting") counting_checks(out);
    if (all || scope == "recurrence") recurrence_checks(out);
    if (all || scope == "calculus") calculus_checks(out);
    return out;
}

}  // namespace nabla::cli
