#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace nabla::cli {

enum class OutputFormat { Plain, Json, Csv };

/// Limits read from the environment (NABLA_ENUMERATION_CAP,
/// NABLA_SYMBOLIC_MAX_N) unless overridden.
struct Limits {
    std::uint64_t enumeration_cap = 1'000'000;
    int symbolic_max_n = 12;
    int graph_max_n = 64;

    static Limits from_environment();
};

/// Runs one command line. Returns the process exit code: 0 success,
/// 1 computation or domain failure, 2 usage or parse failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Limits& limits = Limits::from_environment());

}  // namespace nabla::cli
