// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <string>
#include <vector>

namespace cnt {

/// A point of the integer lattice Z^d. The last coordinate is the barrier
/// axis: the boundary is the hyperplane {x_d = 0}, the upper region B is
/// {x_d > 0} and the lower region is {x_d < 0}.
struct Site {
    std::vector<int> coords;

    Site() = default;
    explicit Site(std::vector<int> c) : coords(std::move(c)) {}

    int dimension() const { return static_cast<int>(coords.size()); }
    int barrier_coord() const { return coords.back(); }

    auto operator<=>(const Site&) const = default;  // lexicographic
};

inline bool on_boundary(const Site& z) { return z.barrier_coord() == 0; }
inline bool in_upper(const Site& z) { return z.barrier_coord() > 0; }
inline bool in_lower(const Site& z) { return z.barrier_coord() < 0; }

int l1_distance(const Site& a, const Site& b);

/// Negates the barrier coordinate.
Site reflect(const Site& z);

/// Zeroes the barrier coordinate.
Site project_to_boundary(const Site& z);

/// z + delta * e_axis, axis 1-based.
Site shifted(const Site& z, int axis, int delta);

std::string to_string(const Site& z);

/// One of the 2d unit moves: axis is 1-based, sign is +1 or -1.
struct Direction {
    int axis = 1;
    int sign = +1;

    /// Dense index in {0, ..., 2d-1}: +e_1, -e_1, +e_2, -e_2, ...
    int index() const { return 2 * (axis - 1) + (sign < 0 ? 1 : 0); }
    static Direction from_index(int i) { return Direction{i / 2 + 1, i % 2 == 0 ? +1 : -1}; }

    /// Swaps +e_d and -e_d; other axes are unchanged.
    Direction reflected(int dimension) const {
        return axis == dimension ? Direction{axis, -sign} : *this;
    }

    bool operator==(const Direction&) const = default;
};

/// "+k" / "-k" with the 1-based axis k.
std::string to_string(const Direction& dir);

/// Parses "+k"/"-k"; throws ParseError otherwise.
Direction parse_direction(const std::string& text);

}  // namespace cnt
