// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cnt/rational.hpp"
#include "cnt/site.hpp"

namespace cnt {

/// Space-inhomogeneous nearest-neighbor step kernel on Z^d: a default
/// direction-probability vector plus finitely many per-site overrides.
/// Any finite-horizon computation touches finitely many sites, so this
/// representation loses nothing.
///
/// Probability vectors are indexed by Direction::index(), length 2d.
struct StepKernel {
    int dimension = 0;
    std::vector<Rational> default_probs;
    std::map<Site, std::vector<Rational>> overrides;

    /// Override vector if the site is overridden, else the default.
    const std::vector<Rational>& probs_at(const Site& z) const;
};

enum class ViolationKind { MassViolation, NondegeneracyViolation, DimensionMismatch };

struct Violation {
    ViolationKind kind;
    std::optional<Site> site;           // absent for kernel-level problems
    std::optional<Direction> direction; // set for nondegeneracy violations
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks dimensional consistency plus the two kernel axioms at every site
/// (the default and each override): all 2d probabilities strictly positive
/// and summing exactly to 1.
ValidationReport validate_kernel(const StepKernel& kernel);

/// P(Z_1^site = site + dir). Assumes a validated kernel.
Rational step_probability(const StepKernel& kernel, const Site& site, const Direction& dir);

/// True iff for every site z with L1-distance at most `horizon` from `base`,
/// the probabilities at z equal those at the reflected site after swapping
/// the +e_d and -e_d directions. Base must lie on the boundary.
bool is_reflection_symmetric(const StepKernel& kernel, int horizon, const Site& base);

StepKernel make_kernel(int dimension, std::vector<Rational> default_probs);

/// Uniform kernel: 1/(2d) in every direction.
StepKernel uniform_kernel(int dimension);

/// 1-d kernel {+1: p_up, -1: 1 - p_up}.
StepKernel bias_kernel_1d(const Rational& p_up);

/// Kernel file schema:
///   {"dimension": d,
///    "default": {"+1": "1/4", "-1": "1/4", ...},
///    "overrides": [{"site": [i1,...,id], "probs": {...}}]}
/// All 2d direction keys must be present in the default and in every
/// override; unknown keys are rejected. "overrides" may be omitted.
StepKernel kernel_from_json(const nlohmann::json& doc);
nlohmann::json kernel_to_json(const StepKernel& kernel);
StepKernel load_kernel_file(const std::string& path);

nlohmann::json validation_report_to_json(const ValidationReport& report);

}  // namespace cnt
