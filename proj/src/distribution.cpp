// SPDX-License-Identifier: Apache-2.0
#include "cnt/distribution.hpp"

#include <nlohmann/json.hpp>

#include "cnt/errors.hpp"

namespace cnt {

Rational Measure::total() const {
    Rational sum = 0;
    for (const auto& [site, mass] : masses) {
        (void)site;
        sum += mass;
    }
    return sum;
}

Rational Measure::at(const Site& z) const {
    const auto it = masses.find(z);
    return it != masses.end() ? it->second : Rational(0);
}

Rational KilledEvolution::absorbed_total() const {
    Rational sum = 0;
    for (const auto& a : absorbed) sum += a.mass;
    return sum;
}

namespace {

void require_start(const StepKernel& kernel, const Site& x0) {
    if (x0.dimension() != kernel.dimension) {
        throw DimensionMismatch("evolve: start site " + to_string(x0) +
                                " vs kernel dimension " +
                                std::to_string(kernel.dimension));
    }
}

/// One pushforward step of a sub-probability mass map.
std::map<Site, Rational> push_forward(const StepKernel& kernel,
                                      const std::map<Site, Rational>& masses) {
    std::map<Site, Rational> next;
    for (const auto& [site, mass] : masses) {
        const auto& probs = kernel.probs_at(site);
        for (int i = 0; i < 2 * kernel.dimension; ++i) {
            const Direction dir = Direction::from_index(i);
            next[shifted(site, dir.axis, dir.sign)] += mass * probs[i];
        }
    }
    return next;
}

}  // namespace

Measure evolve(const StepKernel& kernel, const Site& x0, int t) {
    require_start(kernel, x0);
    Measure m;
    m.masses[x0] = 1;
    for (int step = 0; step < t; ++step) {
        m.masses = push_forward(kernel, m.masses);
    }
    return m;
}

KilledEvolution evolve_killed(const StepKernel& kernel, const Site& x0, int t) {
    require_start(kernel, x0);
    if (!in_upper(x0)) {
        throw StartOnBoundary("killed evolution must start strictly above the boundary, got " +
                              to_string(x0));
    }
    KilledEvolution ke;
    ke.surviving.masses[x0] = 1;
    std::map<std::pair<int, Site>, Rational> absorbed;
    for (int step = 1; step <= t; ++step) {
        auto next = push_forward(kernel, ke.surviving.masses);
        // Unit steps cannot jump the hyperplane, so killing on first boundary
        // membership captures all killed mass.
        for (auto it = next.begin(); it != next.end();) {
            if (on_boundary(it->first)) {
                absorbed[{step, it->first}] += it->second;
                it = next.erase(it);
            } else {
                ++it;
            }
        }
        ke.surviving.masses = std::move(next);
    }
    for (auto& [key, mass] : absorbed) {
        ke.absorbed.push_back({key.first, key.second, std::move(mass)});
    }
    return ke;
}

Rational expect(const Measure& m, const LatticeFunction& f) {
    Rational sum = 0;
    for (const auto& [site, value] : f.values()) {
        const auto it = m.masses.find(site);
        if (it != m.masses.end()) sum += value * it->second;
    }
    return sum;
}

const Measure& EvolveCache::law(const Site& x0, int t) {
    require_start(*kernel_, x0);
    auto& per_site = laws_[x0];
    if (per_site.empty()) {
        Measure base;
        base.masses[x0] = 1;
        per_site.emplace(0, std::move(base));
    }
    auto last = per_site.rbegin();
    int have = last->first;
    while (have < t) {
        Measure next;
        next.masses = push_forward(*kernel_, per_site.at(have).masses);
        ++have;
        per_site.emplace(have, std::move(next));
    }
    return per_site.at(t);
}

nlohmann::json measure_to_json(const Measure& m) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [site, mass] : m.masses) {
        arr.push_back({{"site", site.coords}, {"mass", to_string(mass)}});
    }
    return arr;
}

nlohmann::json killed_to_json(const KilledEvolution& ke) {
    nlohmann::json absorbed = nlohmann::json::array();
    for (const auto& a : ke.absorbed) {
        absorbed.push_back({{"time", a.time}, {"site", a.site.coords}, {"mass", to_string(a.mass)}});
    }
    return {{"surviving", measure_to_json(ke.surviving)}, {"absorbed", absorbed}};
}

}  // namespace cnt
