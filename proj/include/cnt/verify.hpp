// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cnt/distribution.hpp"
#include "cnt/kernel.hpp"
#include "cnt/lattice_function.hpp"
#include "cnt/rational.hpp"
#include "cnt/transform.hpp"

namespace cnt {

/// One exact check: pass if and only if lhs - rhs = 0 as a rational.
struct VerificationReport {
    std::string name;
    std::string instance;
    Rational lhs;
    Rational rhs;
    bool pass = false;

    static VerificationReport compare(std::string name, std::string instance,
                                      Rational lhs, Rational rhs);
};

/// Materializes Nf on every lower site reachable at time t from the boundary
/// anchor, i.e. the sites y - s e_d with (s, y) in S(t, x).
LatticeFunction materialize_lower_transform(EvolveCache& cache, int t, const Site& x,
                                            const LatticeFunction& f);

/// Main identity at a boundary anchor: E[f(Z_t^x)] = E[Nf(Z_t^x)].
VerificationReport check_theorem(const StepKernel& kernel, int t, const Site& x,
                                 const LatticeFunction& f);

/// Nested-anchor agreement: for every (t~, x~) in S(t, x) and every unit
/// indicator payoff in its reach, the transforms at the two anchors agree on
/// S(t~, x~). One report per (anchor, indicator, point).
std::vector<VerificationReport> check_consistency(const StepKernel& kernel, int t,
                                                  const Site& x);

/// Perturbs Nf by epsilon at one lower site p with (-p_d, proj(p)) in S(t, x)
/// and verifies that the anchored expectation detects it: the report's lhs is
/// the observed difference E[(Nf + eps 1_p)(Z_s^y)] - E[f(Z_s^y)], the rhs is
/// the predicted difference eps * P(Z_s^y = p), both nonzero.
VerificationReport check_uniqueness(const StepKernel& kernel, int t, const Site& x,
                                    const LatticeFunction& f, const Site& perturb_site,
                                    const Rational& epsilon);

/// Static-hedge parity with zero rates: E[f(Z_T) 1{tau > T}] =
/// E[f(Z_T)] - E[Nf(Z_T)] for a start strictly above the boundary.
VerificationReport barrier_parity(const StepKernel& kernel, const Site& x0, int T,
                                  const LatticeFunction& f);

/// For reflection-symmetric kernels the transform is the literal reflection:
/// the coefficient table at every reachable lower target is the unit vector
/// at its anchor. One report per (target, support point). Throws NotSymmetric
/// when the kernel is not symmetric within the horizon.
std::vector<VerificationReport> check_reflection(const StepKernel& kernel, int horizon,
                                                 const Site& x);

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;   // sample std dev / sqrt(n); 0 when n = 1
    long n_paths = 0;
    std::uint64_t seed = 0;
};

struct McHedgeResult {
    McEstimate lhs;      // E[f(Z_T) 1{tau > T}]
    McEstimate rhs;      // E[(f - Nf)(Z_T)]
    Rational exact_lhs;  // from barrier_parity
    Rational exact_rhs;
};

/// Simulates n_paths trajectories with a counter-based generator keyed by
/// (seed, path index); identical seeds give bit-identical results. Sample
/// sums are reduced as exact integer counts before the final division, so
/// the estimates do not depend on evaluation order.
McHedgeResult mc_hedge(const StepKernel& kernel, const Site& x0, int T,
                       const LatticeFunction& f, long n_paths, std::uint64_t seed);

nlohmann::json report_to_json(const VerificationReport& report);
nlohmann::json mc_to_json(const McHedgeResult& result);

}  // namespace cnt
