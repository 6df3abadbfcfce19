// SPDX-License-Identifier: Apache-2.0
#include "cnt/verify.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>

#include <nlohmann/json.hpp>

#include "cnt/counter_rng.hpp"
#include "cnt/errors.hpp"
#include "cnt/lattice.hpp"

namespace cnt {

VerificationReport VerificationReport::compare(std::string name, std::string instance,
                                               Rational lhs, Rational rhs) {
    VerificationReport report;
    report.name = std::move(name);
    report.instance = std::move(instance);
    report.pass = lhs == rhs;
    report.lhs = std::move(lhs);
    report.rhs = std::move(rhs);
    return report;
}

namespace {

void require_anchor(const StepKernel& kernel, int t, const Site& x) {
    if (x.dimension() != kernel.dimension) {
        throw DimensionMismatch("anchor site " + to_string(x) + " vs kernel dimension " +
                                std::to_string(kernel.dimension));
    }
    if (t < 1 || !on_boundary(x)) {
        throw InvalidAnchor("(" + std::to_string(t) + ", " + to_string(x) +
                            ") is not a boundary anchor");
    }
}

void require_upper(const LatticeFunction& f) {
    if (f.region() != Region::Upper) {
        throw RegionViolation("payoff must be supported in the upper region");
    }
}

std::string payoff_summary(const LatticeFunction& f) {
    return payoff_to_json(f).dump();
}

}  // namespace

LatticeFunction materialize_lower_transform(EvolveCache& cache, int t, const Site& x,
                                            const LatticeFunction& f) {
    const int d = x.dimension();
    LatticeFunction nf = LatticeFunction::lower();
    for (const auto& p : support_set(t, x).points) {
        nf.set(shifted(p.y, d, -p.s), transform_at(cache, shifted(p.y, d, -p.s), f));
    }
    return nf;
}

VerificationReport check_theorem(const StepKernel& kernel, int t, const Site& x,
                                 const LatticeFunction& f) {
    require_anchor(kernel, t, x);
    require_upper(f);
    EvolveCache cache(kernel);
    const LatticeFunction nf = materialize_lower_transform(cache, t, x, f);
    const Measure& law = cache.law(x, t);
    const std::string instance = "{\"t\":" + std::to_string(t) + ",\"x\":" + to_string(x) +
                                 ",\"f\":" + payoff_summary(f) + "}";
    return VerificationReport::compare("theorem", instance, expect(law, f), expect(law, nf));
}

std::vector<VerificationReport> check_consistency(const StepKernel& kernel, int t,
                                                  const Site& x) {
    require_anchor(kernel, t, x);
    const int d = kernel.dimension;
    EvolveCache cache(kernel);
    const auto big_plus = build_system(cache, t, x, Sign::Plus);
    const auto big_minus = build_system(cache, t, x, Sign::Minus);
    const SupportSet& big = big_plus.index();

    std::vector<VerificationReport> reports;
    for (const auto& nested : big.points) {
        const auto small_plus = build_system(cache, nested.s, nested.y, Sign::Plus);
        const auto small_minus = build_system(cache, nested.s, nested.y, Sign::Minus);
        const SupportSet& small = small_plus.index();
        for (const auto& sample : small.points) {
            LatticeFunction unit = LatticeFunction::upper();
            unit.set(shifted(sample.y, d, sample.s), 1);
            const auto g_big = local_transform(big_plus, big_minus, unit);
            const auto g_small = local_transform(small_plus, small_minus, unit);
            for (const auto& point : small.points) {
                const std::string instance =
                    "{\"t\":" + std::to_string(t) + ",\"x\":" + to_string(x) +
                    ",\"nested_t\":" + std::to_string(nested.s) + ",\"nested_x\":" +
                    to_string(nested.y) + ",\"indicator\":" +
                    to_string(shifted(sample.y, d, sample.s)) + ",\"at_s\":" +
                    std::to_string(point.s) + ",\"at_y\":" + to_string(point.y) + "}";
                reports.push_back(VerificationReport::compare(
                    "consistency", instance,
                    g_big[static_cast<std::size_t>(order_index(big, point))],
                    g_small[static_cast<std::size_t>(order_index(small, point))]));
            }
        }
    }
    return reports;
}

VerificationReport check_uniqueness(const StepKernel& kernel, int t, const Site& x,
                                    const LatticeFunction& f, const Site& perturb_site,
                                    const Rational& epsilon) {
    require_anchor(kernel, t, x);
    require_upper(f);
    if (epsilon == 0) {
        throw Error("check_uniqueness: epsilon must be nonzero");
    }
    if (perturb_site.dimension() != kernel.dimension) {
        throw DimensionMismatch("perturbation site dimension mismatch");
    }
    if (!in_lower(perturb_site)) {
        throw UnreachablePerturbation("perturbation site " + to_string(perturb_site) +
                                      " is not strictly below the boundary");
    }
    const int s = -perturb_site.barrier_coord();
    const Site y = project_to_boundary(perturb_site);
    if (!is_member(t, x, s, y)) {
        throw UnreachablePerturbation("anchor (" + std::to_string(s) + ", " + to_string(y) +
                                      ") of " + to_string(perturb_site) + " is not in S(" +
                                      std::to_string(t) + ", " + to_string(x) + ")");
    }

    EvolveCache cache(kernel);
    const LatticeFunction nf = materialize_lower_transform(cache, s, y, f);
    const Measure& law = cache.law(y, s);

    // N'f = Nf + eps 1_p, compared against f at the anchor of p. The theorem
    // makes E[Nf] = E[f], so the observed difference must equal the predicted
    // eps * P(Z_s^y = p) > 0: the perturbation is always detected.
    const Rational observed = (expect(law, nf) + epsilon * law.at(perturb_site)) - expect(law, f);
    const Rational predicted = epsilon * law.at(perturb_site);
    const std::string instance =
        "{\"t\":" + std::to_string(t) + ",\"x\":" + to_string(x) + ",\"perturb\":" +
        to_string(perturb_site) + ",\"epsilon\":\"" + to_string(epsilon) + "\",\"f\":" +
        payoff_summary(f) + "}";
    return VerificationReport::compare("uniqueness", instance, observed, predicted);
}

VerificationReport barrier_parity(const StepKernel& kernel, const Site& x0, int T,
                                  const LatticeFunction& f) {
    require_upper(f);
    if (T < 1) throw InvalidAnchor("maturity must be >= 1, got " + std::to_string(T));
    const KilledEvolution killed = evolve_killed(kernel, x0, T);  // validates x0
    const Rational lhs = expect(killed.surviving, f);

    EvolveCache cache(kernel);
    const Measure& law = cache.law(x0, T);
    LatticeFunction nf = LatticeFunction::lower();
    for (const auto& [site, mass] : law.masses) {
        (void)mass;
        if (in_lower(site)) nf.set(site, transform_at(cache, site, f));
    }
    const Rational rhs = expect(law, f) - expect(law, nf);
    const std::string instance = "{\"x0\":" + to_string(x0) + ",\"T\":" + std::to_string(T) +
                                 ",\"f\":" + payoff_summary(f) + "}";
    return VerificationReport::compare("parity", instance, lhs, rhs);
}

namespace {

/// Applies fn to every boundary site within L1 distance radius of center,
/// in lexicographic order.
template <typename Fn>
void for_each_boundary_site(const Site& center, int radius, Fn&& fn) {
    const int d = center.dimension();
    Site y = project_to_boundary(center);
    const auto sweep = [&](const auto& self, int axis, int budget) -> void {
        if (axis == d) {
            fn(y);
            return;
        }
        for (int delta = -budget; delta <= budget; ++delta) {
            y.coords[static_cast<std::size_t>(axis - 1)] =
                center.coords[static_cast<std::size_t>(axis - 1)] + delta;
            self(self, axis + 1, budget - std::abs(delta));
        }
        y.coords[static_cast<std::size_t>(axis - 1)] =
            center.coords[static_cast<std::size_t>(axis - 1)];
    };
    sweep(sweep, 1, radius);
}

}  // namespace

std::vector<VerificationReport> check_reflection(const StepKernel& kernel, int horizon,
                                                 const Site& x) {
    require_anchor(kernel, 1, x);
    if (!is_reflection_symmetric(kernel, horizon, x)) {
        throw NotSymmetric("kernel is not reflection symmetric within horizon " +
                           std::to_string(horizon) + " of " + to_string(x));
    }
    const int d = kernel.dimension;
    EvolveCache cache(kernel);
    std::vector<VerificationReport> reports;
    for (int s = 1; s <= horizon; ++s) {
        for_each_boundary_site(x, horizon - s, [&](const Site& y) {
            const Site target = shifted(y, d, -s);
            const CoefficientTable table = coefficients_via_solve(cache, s, y);
            for (int i = 0; i < table.index.size(); ++i) {
                const auto& point = table.index.points[static_cast<std::size_t>(i)];
                const Rational expected = point.s == s && point.y == y ? 1 : 0;
                const std::string instance =
                    "{\"target\":" + to_string(target) + ",\"s\":" + std::to_string(point.s) +
                    ",\"y\":" + to_string(point.y) + "}";
                reports.push_back(VerificationReport::compare(
                    "reflection", instance, table.coeffs[static_cast<std::size_t>(i)],
                    expected));
            }
        });
    }
    return reports;
}

namespace {

/// Cumulative direction thresholds scaled to 2^64 for exact uint64 sampling.
/// The last direction is the fallback, so only 2d-1 thresholds are stored.
std::vector<std::uint64_t> sampling_thresholds(const StepKernel& kernel, const Site& z) {
    const auto& probs = kernel.probs_at(z);
    std::vector<std::uint64_t> out;
    out.reserve(probs.size() - 1);
    Rational cum = 0;
    for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
        cum += probs[i];
        mpz_class scaled;
        mpz_mul_2exp(scaled.get_mpz_t(), cum.get_num_mpz_t(), 64);
        scaled /= cum.get_den();
        out.push_back(scaled.get_ui());
    }
    return out;
}

template <typename ValueFn>
McEstimate reduce_counts(const std::map<Site, long>& counts, long n_paths,
                         std::uint64_t seed, ValueFn&& value_of) {
    Rational sum = 0;
    Rational sum_sq = 0;
    for (const auto& [site, count] : counts) {
        const Rational v = value_of(site);
        if (v == 0) continue;
        sum += count * v;
        sum_sq += count * v * v;
    }
    const Rational mean = sum / n_paths;
    McEstimate est;
    est.value = mean.get_d();
    est.n_paths = n_paths;
    est.seed = seed;
    if (n_paths > 1) {
        const Rational variance = (sum_sq - n_paths * mean * mean) / (n_paths - 1);
        est.std_error = std::sqrt(variance.get_d() / static_cast<double>(n_paths));
    }
    return est;
}

}  // namespace

McHedgeResult mc_hedge(const StepKernel& kernel, const Site& x0, int T,
                       const LatticeFunction& f, long n_paths, std::uint64_t seed) {
    require_upper(f);
    if (n_paths < 1) throw Error("mc_hedge: n_paths must be >= 1");

    McHedgeResult result;
    const VerificationReport exact = barrier_parity(kernel, x0, T, f);  // validates inputs
    result.exact_lhs = exact.lhs;
    result.exact_rhs = exact.rhs;

    std::map<Site, std::vector<std::uint64_t>> thresholds;
    const auto pick_direction = [&](const Site& z, std::uint64_t r) {
        auto it = thresholds.find(z);
        if (it == thresholds.end()) {
            it = thresholds.emplace(z, sampling_thresholds(kernel, z)).first;
        }
        const auto& th = it->second;
        for (std::size_t k = 0; k < th.size(); ++k) {
            if (r < th[k]) return Direction::from_index(static_cast<int>(k));
        }
        return Direction::from_index(static_cast<int>(th.size()));
    };

    std::map<Site, long> endpoint_counts;
    std::map<Site, long> surviving_counts;
    for (long i = 0; i < n_paths; ++i) {
        CounterRng rng(seed, static_cast<std::uint64_t>(i));
        Site pos = x0;
        bool hit = false;
        for (int step = 0; step < T; ++step) {
            const Direction dir = pick_direction(pos, rng.next());
            pos = shifted(pos, dir.axis, dir.sign);
            if (on_boundary(pos)) hit = true;
        }
        ++endpoint_counts[pos];
        if (!hit) ++surviving_counts[pos];
    }

    EvolveCache cache(kernel);
    std::map<Site, Rational> lower_values;  // -Nf at observed lower endpoints
    const auto hedge_value = [&](const Site& z) -> Rational {
        if (in_upper(z)) return f.at(z);
        if (on_boundary(z)) return 0;
        auto it = lower_values.find(z);
        if (it == lower_values.end()) {
            it = lower_values.emplace(z, -transform_at(cache, z, f)).first;
        }
        return it->second;
    };

    result.lhs = reduce_counts(surviving_counts, n_paths, seed,
                               [&](const Site& z) { return f.at(z); });
    result.rhs = reduce_counts(endpoint_counts, n_paths, seed, hedge_value);
    return result;
}

nlohmann::json report_to_json(const VerificationReport& report) {
    return {{"name", report.name},
            {"instance", report.instance},
            {"lhs", to_string(report.lhs)},
            {"rhs", to_string(report.rhs)},
            {"pass", report.pass}};
}

namespace {

double snap_significant(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return std::strtod(buf, nullptr);
}

nlohmann::json estimate_to_json(const McEstimate& est) {
    return {{"value", snap_significant(est.value)},
            {"std_error", snap_significant(est.std_error)},
            {"n_paths", est.n_paths},
            {"seed", est.seed}};
}

}  // namespace

nlohmann::json mc_to_json(const McHedgeResult& result) {
    return {{"lhs", estimate_to_json(result.lhs)},
            {"rhs", estimate_to_json(result.rhs)},
            {"exact_lhs", to_string(result.exact_lhs)},
            {"exact_rhs", to_string(result.exact_rhs)}};
}

}  // namespace cnt
