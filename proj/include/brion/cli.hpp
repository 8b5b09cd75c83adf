#pragma once

#include "brion/box.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace brion::cli {

enum class OutputFormat { text, json };

/// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

struct RunConfig {
    std::string subcommand;
    std::string input_path;     // "-" reads stdin
    std::string inline_document; // used when non-empty
    std::optional<Box> box;
    std::optional<std::string> variant;
    int trials = 20;
    std::uint64_t seed = 0;
    OutputFormat output_format = OutputFormat::text;

    // complexes
    std::optional<std::string> point;
    std::optional<std::string> direction;
    // sigma
    std::size_t vertex = 0;
    std::string mode = "v";
    // gen
    int gen_dim = 2;
    int gen_points = 6;
    long gen_bound = 4;
    bool gen_rational = false;
};

/// Runs one already-parsed command; returns the process exit code.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and executes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace brion::cli
