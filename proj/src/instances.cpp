// SPDX-License-Identifier: Apache-2.0
#include "cnt/instances.hpp"

#include <algorithm>

#include "cnt/errors.hpp"

namespace cnt {

std::vector<int> random_composition(CounterRng& rng, int total, int parts) {
    if (parts < 1 || total < parts) {
        throw Error("random_composition: cannot split " + std::to_string(total) +
                    " into " + std::to_string(parts) + " positive parts");
    }
    // Stars and bars: choose parts-1 distinct cut points in 1..total-1.
    std::vector<int> cuts(static_cast<std::size_t>(total - 1));
    for (int i = 0; i < total - 1; ++i) cuts[static_cast<std::size_t>(i)] = i + 1;
    for (int i = 0; i < parts - 1; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(total - 1 - i)));
        std::swap(cuts[static_cast<std::size_t>(i)], cuts[static_cast<std::size_t>(j)]);
    }
    cuts.resize(static_cast<std::size_t>(parts - 1));
    std::sort(cuts.begin(), cuts.end());
    std::vector<int> out;
    int prev = 0;
    for (const int c : cuts) {
        out.push_back(c - prev);
        prev = c;
    }
    out.push_back(total - prev);
    return out;
}

namespace {

constexpr int kWeightTotal = 12;

std::vector<Rational> random_probs(CounterRng& rng, int dimension) {
    const auto weights = random_composition(rng, kWeightTotal, 2 * dimension);
    std::vector<Rational> probs;
    probs.reserve(weights.size());
    for (const int w : weights) probs.emplace_back(w, kWeightTotal);
    return probs;
}

/// Weights with the +e_d and -e_d entries equal.
std::vector<Rational> random_symmetric_probs(CounterRng& rng, int dimension) {
    const int d = dimension;
    // 2m goes to the barrier axis, the rest to the others. For d = 1 the
    // whole weight sits on the barrier axis and the only symmetric kernel
    // is the simple random walk.
    const int max_m = (kWeightTotal - 2 * (d - 1)) / 2;
    const int m = d == 1 ? kWeightTotal / 2 : rng.range(1, max_m);
    std::vector<int> weights(static_cast<std::size_t>(2 * d));
    if (d > 1) {
        const auto rest = random_composition(rng, kWeightTotal - 2 * m, 2 * (d - 1));
        std::copy(rest.begin(), rest.end(), weights.begin());
    }
    weights[static_cast<std::size_t>(2 * d - 2)] = m;
    weights[static_cast<std::size_t>(2 * d - 1)] = m;
    std::vector<Rational> probs;
    probs.reserve(weights.size());
    for (const int w : weights) probs.emplace_back(w, kWeightTotal);
    return probs;
}

Site random_site_in_box(CounterRng& rng, int dimension, int radius, int min_height,
                        int max_height) {
    std::vector<int> coords(static_cast<std::size_t>(dimension));
    for (int i = 0; i + 1 < dimension; ++i) {
        coords[static_cast<std::size_t>(i)] = rng.range(-radius, radius);
    }
    coords[static_cast<std::size_t>(dimension - 1)] = rng.range(min_height, max_height);
    return Site(std::move(coords));
}

/// Mirror of a probability vector: +e_d and -e_d swapped.
std::vector<Rational> mirrored_probs(const std::vector<Rational>& probs, int dimension) {
    auto out = probs;
    std::swap(out[static_cast<std::size_t>(2 * dimension - 2)],
              out[static_cast<std::size_t>(2 * dimension - 1)]);
    return out;
}

}  // namespace

StepKernel random_kernel(CounterRng& rng, int dimension, int n_overrides,
                         int override_radius) {
    StepKernel kernel = make_kernel(dimension, random_probs(rng, dimension));
    for (int i = 0; i < n_overrides; ++i) {
        const Site site =
            random_site_in_box(rng, dimension, override_radius, -override_radius,
                               override_radius);
        kernel.overrides[site] = random_probs(rng, dimension);
    }
    return kernel;
}

StepKernel random_symmetric_kernel(CounterRng& rng, int dimension, int n_overrides,
                                   int override_radius) {
    StepKernel kernel = make_kernel(dimension, random_symmetric_probs(rng, dimension));
    for (int i = 0; i < n_overrides; ++i) {
        const Site site =
            random_site_in_box(rng, dimension, override_radius, 0, override_radius);
        if (on_boundary(site)) {
            kernel.overrides[site] = random_symmetric_probs(rng, dimension);
        } else {
            const auto probs = random_probs(rng, dimension);
            kernel.overrides[site] = probs;
            kernel.overrides[reflect(site)] = mirrored_probs(probs, dimension);
        }
    }
    return kernel;
}

Site random_boundary_site(CounterRng& rng, int dimension, int radius) {
    return random_site_in_box(rng, dimension, radius, 0, 0);
}

Site random_upper_site(CounterRng& rng, int dimension, int radius, int max_height) {
    return random_site_in_box(rng, dimension, radius, 1, max_height);
}

Rational random_nonzero_rational(CounterRng& rng) {
    int num = 0;
    while (num == 0) num = rng.range(-9, 9);
    return Rational(num, rng.range(1, 9));
}

LatticeFunction random_upper_payoff(CounterRng& rng, const SupportSet& set) {
    const int d = set.x.dimension();
    LatticeFunction f = LatticeFunction::upper();
    for (const auto& p : set.points) {
        if (rng.below(3) == 0) continue;  // leave roughly a third of the sites at zero
        f.set(shifted(p.y, d, p.s), random_nonzero_rational(rng));
    }
    return f;
}

LatticeFunction random_upper_payoff_near(CounterRng& rng, const Site& x0, int horizon) {
    const int d = x0.dimension();
    LatticeFunction f = LatticeFunction::upper();
    // A handful of upper sites in the reachable L1 ball.
    const int wanted = rng.range(1, 4);
    for (int i = 0; i < 4 * wanted && static_cast<int>(f.values().size()) < wanted; ++i) {
        Site z = x0;
        int budget = horizon;
        for (int axis = 1; axis <= d; ++axis) {
            const int delta = rng.range(-budget, budget);
            z.coords[static_cast<std::size_t>(axis - 1)] += delta;
            budget -= std::abs(delta);
        }
        if (in_upper(z)) f.set(z, random_nonzero_rational(rng));
    }
    if (f.empty() && in_upper(x0)) f.set(x0, 1);
    return f;
}

}  // namespace cnt
