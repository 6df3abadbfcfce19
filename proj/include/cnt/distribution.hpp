// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cnt/kernel.hpp"
#include "cnt/lattice_function.hpp"
#include "cnt/rational.hpp"
#include "cnt/site.hpp"

namespace cnt {

/// A finitely supported sub-probability distribution with exact masses.
struct Measure {
    std::map<Site, Rational> masses;

    Rational total() const;
    Rational at(const Site& z) const;
};

struct Absorption {
    int time = 0;   // in 1..t
    Site site;      // on the boundary
    Rational mass;
};

/// Law of the chain killed at the boundary: the surviving sub-probability
/// plus the hitting-time/site decomposition of the killed mass. Surviving
/// total + absorbed total = 1 exactly.
struct KilledEvolution {
    Measure surviving;
    std::vector<Absorption> absorbed;  // sorted by (time, site)

    Rational absorbed_total() const;
};

/// Exact law of Z_t^{x0}: the t-fold pushforward under the kernel.
Measure evolve(const StepKernel& kernel, const Site& x0, int t);

/// Law restricted to paths that do not visit the boundary at times 1..t.
/// A visit at time t itself counts as killed. Throws StartOnBoundary unless
/// x0 lies strictly in the upper region.
KilledEvolution evolve_killed(const StepKernel& kernel, const Site& x0, int t);

/// Exact sum of f(z) * mass(z).
Rational expect(const Measure& m, const LatticeFunction& f);

/// Memoizes the laws evolve(kernel, x0, s) for s = 0..t per start site.
/// Returned references stay valid for the cache's lifetime. Not thread-safe;
/// use one instance per task.
class EvolveCache {
  public:
    explicit EvolveCache(const StepKernel& kernel) : kernel_(&kernel) {}

    const Measure& law(const Site& x0, int t);
    const StepKernel& kernel() const { return *kernel_; }

  private:
    const StepKernel* kernel_;
    std::map<Site, std::map<int, Measure>> laws_;
};

/// Sorted array of {"site": [...], "mass": "p/q"}.
nlohmann::json measure_to_json(const Measure& m);
nlohmann::json killed_to_json(const KilledEvolution& ke);

}  // namespace cnt
