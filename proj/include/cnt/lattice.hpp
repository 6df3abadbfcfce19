// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cnt/site.hpp"

namespace cnt {

/// A (time, boundary-site) pair. The default comparison (s ascending, then
/// lexicographic y) is the canonical order used to index every matrix.
struct SupportPoint {
    int s = 0;
    Site y;

    auto operator<=>(const SupportPoint&) const = default;
};

/// The ordered support set S(t, x): all pairs (s, y) with 1 <= s <= t,
/// ||y - x||_1 <= t - s and t - s - ||y - x||_1 even. In canonical order
/// the anchor (t, x) is the last element.
struct SupportSet {
    int t = 0;
    Site x;
    std::vector<SupportPoint> points;

    int size() const { return static_cast<int>(points.size()); }
    const SupportPoint& anchor() const { return points.back(); }
};

/// Enumerates S(t, x) in canonical order. Throws InvalidAnchor for t < 1 or
/// x off the boundary.
SupportSet support_set(int t, const Site& x);

/// (s, y) in S(t, x), without enumeration. x and y must lie on the boundary.
bool is_member(int t, const Site& x, int s, const Site& y);

/// 0-based position of p in the canonical order; throws NotMember.
int order_index(const SupportSet& set, const SupportPoint& p);

/// {"t": t, "x": [...], "points": [{"s": s, "y": [...]}, ...]}
nlohmann::json support_set_to_json(const SupportSet& set);

}  // namespace cnt
