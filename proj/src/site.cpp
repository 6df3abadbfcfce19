// SPDX-License-Identifier: Apache-2.0
#include "cnt/site.hpp"

#include <cctype>
#include <cstdlib>

#include "cnt/errors.hpp"

namespace cnt {

int l1_distance(const Site& a, const Site& b) {
    if (a.dimension() != b.dimension()) {
        throw DimensionMismatch("l1_distance: sites of dimension " +
                                std::to_string(a.dimension()) + " and " +
                                std::to_string(b.dimension()));
    }
    int sum = 0;
    for (int i = 0; i < a.dimension(); ++i) {
        sum += std::abs(a.coords[i] - b.coords[i]);
    }
    return sum;
}

Site reflect(const Site& z) {
    Site out = z;
    out.coords.back() = -out.coords.back();
    return out;
}

Site project_to_boundary(const Site& z) {
    Site out = z;
    out.coords.back() = 0;
    return out;
}

Site shifted(const Site& z, int axis, int delta) {
    Site out = z;
    out.coords[axis - 1] += delta;
    return out;
}

std::string to_string(const Site& z) {
    std::string out = "[";
    for (int i = 0; i < z.dimension(); ++i) {
        if (i) out += ",";
        out += std::to_string(z.coords[i]);
    }
    return out + "]";
}

std::string to_string(const Direction& dir) {
    return (dir.sign > 0 ? "+" : "-") + std::to_string(dir.axis);
}

Direction parse_direction(const std::string& text) {
    if (text.size() < 2 || (text[0] != '+' && text[0] != '-')) {
        throw ParseError("not a direction: \"" + text + "\"");
    }
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ParseError("not a direction: \"" + text + "\"");
        }
    }
    const int axis = std::atoi(text.c_str() + 1);
    if (axis < 1) {
        throw ParseError("direction axis must be >= 1: \"" + text + "\"");
    }
    return Direction{axis, text[0] == '+' ? +1 : -1};
}

}  // namespace cnt
