// SPDX-License-Identifier: Apache-2.0
#include "cnt/lattice.hpp"

#include <algorithm>
#include <cstdlib>

#include <nlohmann/json.hpp>

#include "cnt/errors.hpp"

namespace cnt {

namespace {

void require_anchor(int t, const Site& x) {
    if (t < 1) {
        throw InvalidAnchor("anchor time must be >= 1, got " + std::to_string(t));
    }
    if (!on_boundary(x)) {
        throw InvalidAnchor("anchor site " + to_string(x) + " is not on the boundary");
    }
}

}  // namespace

SupportSet support_set(int t, const Site& x) {
    require_anchor(t, x);
    const int d = x.dimension();

    SupportSet set;
    set.t = t;
    set.x = x;
    for (int s = 1; s <= t; ++s) {
        const int radius = t - s;
        // Boundary sites y with ||y - x||_1 <= radius and matching parity,
        // swept over the first d-1 coordinates in lexicographic order.
        Site y = project_to_boundary(x);
        const auto sweep = [&](const auto& self, int axis, int budget) -> void {
            if (axis == d) {
                const int dist = l1_distance(y, x);
                if ((radius - dist) % 2 == 0) set.points.push_back({s, y});
                return;
            }
            for (int delta = -budget; delta <= budget; ++delta) {
                y.coords[axis - 1] = x.coords[axis - 1] + delta;
                self(self, axis + 1, budget - std::abs(delta));
            }
            y.coords[axis - 1] = x.coords[axis - 1];
        };
        sweep(sweep, 1, radius);
    }
    return set;
}

bool is_member(int t, const Site& x, int s, const Site& y) {
    if (!on_boundary(x) || !on_boundary(y)) return false;
    if (s < 1 || s > t) return false;
    const int dist = l1_distance(y, x);
    return dist <= t - s && (t - s - dist) % 2 == 0;
}

int order_index(const SupportSet& set, const SupportPoint& p) {
    const auto it = std::lower_bound(set.points.begin(), set.points.end(), p);
    if (it == set.points.end() || *it != p) {
        throw NotMember("(" + std::to_string(p.s) + ", " + to_string(p.y) +
                        ") is not in S(" + std::to_string(set.t) + ", " +
                        to_string(set.x) + ")");
    }
    return static_cast<int>(it - set.points.begin());
}

nlohmann::json support_set_to_json(const SupportSet& set) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : set.points) {
        points.push_back({{"s", p.s}, {"y", p.y.coords}});
    }
    return {{"t", set.t}, {"x", set.x.coords}, {"points", points}};
}

}  // namespace cnt
