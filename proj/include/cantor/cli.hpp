#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cantor/spec.hpp"

namespace cantor::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kUsageError = 2 };

struct RunConfig {
    std::string verb;  // set | phi | dim | measure | valuation | verify | diagnose
    std::optional<std::string> spec_file;
    std::optional<int> r;
    std::vector<int> digits;
    int level = 3;
    int samples = 0;  // 0: verb default
    int depth = 0;    // 0: verb default
    std::optional<std::string> exponent;
    std::uint64_t seed = 1;
    std::string out;     // empty: stdout
    std::string format;  // empty: verb default
    std::string gaps = "none";
    std::string x;
    std::string x_tilde, epsilon, anchor, lambda;
    std::string cylinders;
};

// Reads {"r": int, "kept_digits": [int, ...]}.
CantorSpec parse_spec_json(const std::string& text);
// Specs selected by the config: the file or inline flags, else every preset.
std::vector<CantorSpec> resolve_specs(const RunConfig& config);

// Executes one verb, writing the artifact to config.out (or `out`) and
// diagnostics to `err`. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace cantor::cli
