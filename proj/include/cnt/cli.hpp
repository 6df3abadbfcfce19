// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cnt {

/// One CLI invocation. Site-valued parameters stay as raw coordinate vectors
/// here; dimension consistency with the kernel is checked when the command
/// runs.
struct RunConfig {
    std::string kernel_path;
    std::string command;  // validate | support | evolve | transform | coeffs | verify | mc

    std::optional<int> t;
    std::optional<std::vector<int>> x;
    std::optional<std::vector<int>> x0;
    std::optional<std::vector<int>> target;
    bool killed = false;

    std::string payoff_path;
    std::string method = "solve";  // coeffs: solve | cramer
    std::string suite = "all";     // verify
    std::uint64_t seed = 0;
    long instances = 20;
    long paths = 0;
    std::optional<int> horizon;

    std::string format = "json";  // json | tsv
    bool as_float = false;
    int digits = 15;
};

/// Exit codes: 0 success, 1 failing verification/validation reports,
/// 2 malformed input or precondition failure. Diagnostics go to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses a site argument: a JSON array "[1,-2]" or a bare integer for d=1.
std::vector<int> parse_site_arg(const std::string& text);

}  // namespace cnt
