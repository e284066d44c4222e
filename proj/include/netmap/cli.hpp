#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "netmap/portrait.hpp"

namespace netmap {

enum class OutputFormat { text, json, dot };

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::optional<int> degree;
    std::optional<Int> m, n;
    std::vector<Int> matrix;       // row-major a b c d
    std::vector<Int> translation;  // x y
    std::string slopes_path;
    OutputFormat format = OutputFormat::text;
    ChoicePolicy policy = ChoicePolicy::standard;
    bool pure = false;
    bool allow_large = false;
    int workers = 1;
};

inline constexpr int kDefaultDegreeCap = 12;

// Executes one subcommand; throws Error on failure.
void run(const RunConfig& config, std::ostream& out);

// Parses argv, runs, prints "error[kind]: message" on failure and returns
// the process exit code.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace netmap
