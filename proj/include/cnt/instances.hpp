// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "cnt/counter_rng.hpp"
#include "cnt/kernel.hpp"
#include "cnt/lattice.hpp"
#include "cnt/lattice_function.hpp"

namespace cnt {

/// Seed-deterministic generators for randomized verification instances.
/// Kernels draw each per-site probability vector as a composition of 12 into
/// 2d positive parts, so probabilities are rationals with denominator
/// dividing 12 and validity holds by construction.

/// Random composition of `total` into `parts` positive integers.
std::vector<int> random_composition(CounterRng& rng, int total, int parts);

StepKernel random_kernel(CounterRng& rng, int dimension, int n_overrides = 2,
                         int override_radius = 2);

/// Reflection-symmetric variant: the default weights on +e_d and -e_d agree
/// and overrides come in mirrored pairs.
StepKernel random_symmetric_kernel(CounterRng& rng, int dimension, int n_overrides = 1,
                                   int override_radius = 2);

/// Boundary site with the first d-1 coordinates uniform in [-radius, radius].
Site random_boundary_site(CounterRng& rng, int dimension, int radius = 2);

/// Upper site strictly above the boundary, within the given box.
Site random_upper_site(CounterRng& rng, int dimension, int radius = 2, int max_height = 3);

/// Payoff on the upper sample sites {y + s e_d : (s, y) in S(t, x)}: each
/// site independently gets a small random rational (possibly zero).
LatticeFunction random_upper_payoff(CounterRng& rng, const SupportSet& set);

/// Payoff on upper sites within L1 distance `horizon` of x0.
LatticeFunction random_upper_payoff_near(CounterRng& rng, const Site& x0, int horizon);

/// Nonzero rational with numerator in [-9, 9] and denominator in [1, 9].
Rational random_nonzero_rational(CounterRng& rng);

}  // namespace cnt
