#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>

#include "nabla/nabla.hpp"
#include "verify.hpp"

namespace nabla::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Usage-level failure that maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<long long> env_integer(const char* name) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    try {
        std::size_t used = 0;
        const long long v = std::stoll(raw, &used);
        if (used != std::string(raw).size() || v < 1) return std::nullopt;
        return v;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::vector<int> parse_word(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit) || item.size() > 6) {
            throw ParseError("malformed word '" + text + "': expected comma-separated operator indices");
        }
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw ParseError("empty word");
    return out;
}

/// "[x1*x2, 0]" or the JSON form ["x1*x2", "0"].
std::vector<Polynomial> parse_vector(const std::string& text, int n) {
    std::string body = text;
    auto trim = [](std::string& s) {
        const auto first = s.find_first_not_of(" \t\n\r");
        const auto last = s.find_last_not_of(" \t\n\r");
        s = first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
    };
    trim(body);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
        throw ParseError("input must be a bracketed list of polynomials, got '" + text + "'");
    }
    body = body.substr(1, body.size() - 2);
    std::vector<Polynomial> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        trim(item);
        if (item.size() >= 2 && item.front() == '"' && item.back() == '"') item = item.substr(1, item.size() - 2);
        out.push_back(Polynomial::parse(item, n));
    }
    if (out.empty()) throw ParseError("input list is empty");
    return out;
}

Json strings(const std::vector<BigInt>& xs) {
    Json arr = Json::array();
    for (const auto& x : xs) arr.push_back(to_decimal(x));
    return arr;
}

void check_graph_n(int n, const Limits& limits) {
    if (n > limits.graph_max_n) {
        throw DomainError("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(limits.graph_max_n) +
                          " (raise with --max-n)");
    }
}

void check_symbolic_n(int n, const Limits& limits) {
    if (n > limits.symbolic_max_n) {
        throw DomainError("n = " + std::to_string(n) + " exceeds the symbolic cap " +
                          std::to_string(limits.symbolic_max_n) + " (NABLA_SYMBOLIC_MAX_N)");
    }
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t t = 0; t < xs.size(); ++t) {
        if (t) out += sep;
        out += xs[t];
    }
    return out;
}

// --- commands --------------------------------------------------------------

void cmd_count(int n, int k, OutputFormat format, const Limits& limits, std::ostream& out) {
    check_graph_n(n, limits);
    const BigInt count = count_total(Dimension(n), k);
    switch (format) {
        case OutputFormat::Plain: out << to_decimal(count) << "\n"; break;
        case OutputFormat::Json:
            out << Json{{"n", n}, {"k", k}, {"count", to_decimal(count)}}.dump() << "\n";
            break;
        case OutputFormat::Csv: out << "n,k,count\n" << n << "," << k << "," << to_decimal(count) << "\n"; break;
    }
}

void cmd_sequence(int n, int k_max, OutputFormat format, const Limits& limits, std::ostream& out) {
    check_graph_n(n, limits);
    const CountSequence seq = count_sequence(Dimension(n), k_max);
    switch (format) {
        case OutputFormat::Plain: {
            std::vector<std::string> parts;
            for (const auto& v : seq.values()) parts.push_back(to_decimal(v));
            out << join(parts, ",") << "\n";
            break;
        }
        case OutputFormat::Json:
            out << Json{{"n", n}, {"k_max", k_max}, {"values", strings(seq.values())}}.dump() << "\n";
            break;
        case OutputFormat::Csv:
            out << "k,f_k\n";
            for (int k = 1; k <= seq.k_max(); ++k) out << k << "," << to_decimal(seq.at(k)) << "\n";
            break;
    }
}

void cmd_recurrence(int n, OutputFormat format, const Limits& limits, std::ostream& out) {
    check_graph_n(n, limits);
    const Dimension dim(n);
    const CountSequence seq = count_sequence(dim, 2 * n + 8);
    const Recurrence minimal = minimal_recurrence(seq);
    const IntegerPolynomial charpoly = characteristic_polynomial(build_adjacency(dim));
    const auto& table = paper_reference_table();
    const auto row = table.find(n);

    Json j{{"n", n},
           {"recurrence", minimal.to_string()},
           {"order", minimal.order()},
           {"coefficients", strings(minimal.coefficients)},
           {"valid_from", minimal.valid_from},
           {"verified_terms", seq.k_max()},
           {"characteristic_polynomial", charpoly.to_string()},
           {"characteristic_coefficients", strings(charpoly.coefficients())}};
    if (row != table.end()) {
        j["matches_paper_table"] = minimal.same_relation(row->second);
        j["paper_table_row"] = row->second.to_string();
        j["paper_table_row_holds"] = verify_recurrence(row->second, seq);
    }
    switch (format) {
        case OutputFormat::Json: out << j.dump() << "\n"; break;
        case OutputFormat::Plain:
            out << "recurrence: " << minimal.to_string() << "\n"
                << "characteristic polynomial: " << charpoly.to_string() << "\n";
            if (row != table.end()) {
                out << "matches_paper_table: " << (j["matches_paper_table"].get<bool>() ? "true" : "false") << "\n"
                    << "paper_table_row: " << row->second.to_string() << "\n"
                    << "paper_table_row_holds: " << (j["paper_table_row_holds"].get<bool>() ? "true" : "false")
                    << "\n";
            }
            break;
        case OutputFormat::Csv:
            out << "n,order,recurrence,characteristic_polynomial,matches_paper_table\n"
                << n << "," << minimal.order() << ",\"" << minimal.to_string() << "\",\"" << charpoly.to_string()
                << "\","
                << (row == table.end() ? "" : (j["matches_paper_table"].get<bool>() ? "true" : "false")) << "\n";
            break;
    }
}

void cmd_enumerate(int n, int length, bool nontrivial_only, OutputFormat format, const Limits& limits,
                   std::ostream& out) {
    check_graph_n(n, limits);
    const Dimension dim(n);
    std::vector<CompositionWord> words;
    if (nontrivial_only) {
        // The alternating family has at most n members; no cap needed.
        words = enumerate_nontrivial(dim, length);
    } else {
        words = enumerate_words(dim, length, limits.enumeration_cap);
    }
    switch (format) {
        case OutputFormat::Json: {
            Json list = Json::array();
            for (const auto& w : words) {
                Json item{{"word", w.indices()},
                          {"composition", render_composition(w)},
                          {"class", std::string(to_string(classify_word(w)))}};
                if (n == 3) item["names"] = render_classical(w);
                list.push_back(std::move(item));
            }
            out << Json{{"n", n},
                        {"length", length},
                        {"nontrivial_only", nontrivial_only},
                        {"count", std::to_string(words.size())},
                        {"words", std::move(list)}}
                       .dump()
                << "\n";
            break;
        }
        case OutputFormat::Plain:
            for (const auto& w : words) {
                out << render_application_order(w) << "  " << render_composition(w);
                if (n == 3) out << "  " << render_classical(w);
                out << "\n";
            }
            break;
        case OutputFormat::Csv:
            out << "word,composition,class\n";
            for (const auto& w : words) {
                out << "\"" << render_application_order(w) << "\"," << render_composition(w) << ","
                    << to_string(classify_word(w)) << "\n";
            }
            break;
    }
}

void cmd_apply(int n, const std::string& word_text, const std::string& input, OutputFormat format,
               const Limits& limits, std::ostream& out) {
    check_symbolic_n(n, limits);
    const Dimension dim(n);
    const CompositionWord word(dim, parse_word(word_text));
    auto entries = parse_vector(input, n);
    if (auto bad = word.first_undefined_pair()) {
        throw UndefinedCompositionError(bad->first, bad->second, domain_level(bad->second, dim),
                                        codomain_level(bad->first, dim));
    }
    const int level = domain_level(word.indices().front(), dim);
    const auto expected = index_subsets(n, level).size();
    if (entries.size() != expected) {
        throw DomainError("nabla_" + std::to_string(word.indices().front()) + " on R^" + std::to_string(n) +
                          " takes " + std::to_string(expected) + " components, got " +
                          std::to_string(entries.size()));
    }
    const ComponentVector result = apply_word(word, ComponentVector(dim, level, std::move(entries)));
    std::vector<std::string> parts;
    for (const auto& p : result.entries()) parts.push_back(p.to_string());
    switch (format) {
        case OutputFormat::Json: {
            Json j{{"n", n},
                   {"word", word.indices()},
                   {"composition", render_composition(word)},
                   {"level", result.level()},
                   {"result", parts}};
            out << j.dump() << "\n";
            break;
        }
        case OutputFormat::Plain: out << result.to_string() << "\n"; break;
        case OutputFormat::Csv:
            out << "slot,component\n";
            for (std::size_t t = 0; t < parts.size(); ++t) out << t + 1 << ",\"" << parts[t] << "\"\n";
            break;
    }
}

int cmd_verify(const std::string& scope, OutputFormat format, std::ostream& out, std::ostream& err) {
    const auto checks = run_checks(scope);
    const auto passed = static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; }));
    const bool ok = passed == checks.size();
    switch (format) {
        case OutputFormat::Json: {
            Json list = Json::array();
            for (const auto& c : checks) list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            out << Json{{"scope", scope},
                        {"passed", ok},
                        {"summary", std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks passed"},
                        {"checks", std::move(list)}}
                       .dump()
                << "\n";
            break;
        }
        case OutputFormat::Plain:
            for (const auto& c : checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
            out << passed << "/" << checks.size() << " checks passed\n";
            break;
        case OutputFormat::Csv:
            out << "check,passed,detail\n";
            for (const auto& c : checks) {
                out << c.name << "," << (c.passed ? "true" : "false") << ",\"" << c.detail << "\"\n";
            }
            break;
    }
    if (!ok) {
        const auto first = std::find_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; });
        err << "verify: first failing check " << first->name << ": " << first->detail << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

Limits Limits::from_environment() {
    Limits limits;
    if (auto cap = env_integer("NABLA_ENUMERATION_CAP")) limits.enumeration_cap = static_cast<std::uint64_t>(*cap);
    if (auto cap = env_integer("NABLA_SYMBOLIC_MAX_N")) limits.symbolic_max_n = static_cast<int>(*cap);
    return limits;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Limits& base_limits) {
    Limits limits = base_limits;
    CLI::App app{"Count, classify and symbolically verify compositions of the operators nabla_1..nabla_n on R^n",
                 "nabla"};
    app.require_subcommand(1);
    app.add_option("--max-n", limits.graph_max_n, "Largest n accepted by graph and counting commands")
        ->check(CLI::PositiveNumber);

    const std::map<std::string, OutputFormat> formats{
        {"plain", OutputFormat::Plain}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};
    auto add_format = [&](CLI::App* cmd, OutputFormat& target) {
        cmd->add_option("--format", target, "Output format: plain, json or csv")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };

    int n = 0, k = 0, k_max = 0, length = 0;
    bool nontrivial = false;
    std::string word, input, scope;
    OutputFormat count_format = OutputFormat::Plain;
    OutputFormat composite_format = OutputFormat::Json;

    auto* count = app.add_subcommand("count", "Number of meaningful compositions of order k");
    count->add_option("--n", n, "Dimension (n >= 3)")->required();
    count->add_option("--k", k, "Order (k >= 0)")->required();
    add_format(count, count_format);

    auto* sequence = app.add_subcommand("sequence", "Counts f(1)..f(k_max)");
    sequence->add_option("--n", n, "Dimension (n >= 3)")->required();
    sequence->add_option("--k-max", k_max, "Last order")->required();
    add_format(sequence, composite_format);

    auto* recurrence = app.add_subcommand("recurrence", "Minimal recurrence and characteristic polynomial");
    recurrence->add_option("--n", n, "Dimension (n >= 3)")->required();
    add_format(recurrence, composite_format);

    auto* enumerate = app.add_subcommand("enumerate", "List meaningful compositions of a given length");
    enumerate->add_option("--n", n, "Dimension (n >= 3)")->required();
    enumerate->add_option("--length", length, "Word length")->required();
    enumerate->add_flag("--nontrivial", nontrivial, "Only non-trivial compositions");
    add_format(enumerate, composite_format);

    auto* apply = app.add_subcommand("apply", "Apply a composition to polynomial components");
    apply->add_option("--n", n, "Dimension (n >= 3)")->required();
    apply->add_option("--word", word, "Operator indices in application order, e.g. 1,2")->required();
    apply->add_option("--input", input, "Components, e.g. \"[x1*x2]\"")->required();
    add_format(apply, composite_format);

    auto* verify = app.add_subcommand("verify", "Run the built-in consistency checks");
    verify->add_option("--scope", scope, "counting, recurrence, calculus or all")
        ->required()
        ->check(CLI::IsMember({"counting", "recurrence", "calculus", "all"}));
    add_format(verify, composite_format);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) {
            cmd_count(n, k, count_format, limits, out);
        } else if (sequence->parsed()) {
            cmd_sequence(n, k_max, composite_format, limits, out);
        } else if (recurrence->parsed()) {
            cmd_recurrence(n, composite_format, limits, out);
        } else if (enumerate->parsed()) {
            cmd_enumerate(n, length, nontrivial, composite_format, limits, out);
        } else if (apply->parsed()) {
            cmd_apply(n, word, input, composite_format, limits, out);
        } else if (verify->parsed()) {
            return cmd_verify(scope, composite_format, out, err);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace nabla::cli
