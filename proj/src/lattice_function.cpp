// SPDX-License-Identifier: Apache-2.0
#include "cnt/lattice_function.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "cnt/errors.hpp"

namespace cnt {

void LatticeFunction::set(const Site& z, Rational value) {
    if (value == 0) {
        values_.erase(z);
        return;
    }
    const bool admissible = region_ == Region::Upper ? in_upper(z) : in_lower(z);
    if (!admissible) {
        throw RegionViolation("site " + to_string(z) + " is outside the " +
                              (region_ == Region::Upper ? "upper" : "lower") +
                              " support region");
    }
    values_[z] = std::move(value);
}

Rational LatticeFunction::at(const Site& z) const {
    const auto it = values_.find(z);
    return it != values_.end() ? it->second : Rational(0);
}

namespace {

Site site_from_key(const std::string& key, int dimension) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(key);
    } catch (const nlohmann::json::exception&) {
        throw ParseError("payoff: bad site key \"" + key + "\"");
    }
    std::vector<int> coords;
    if (parsed.is_number_integer()) {
        coords.push_back(parsed.get<int>());
    } else if (parsed.is_array()) {
        for (const auto& c : parsed) {
            if (!c.is_number_integer()) {
                throw ParseError("payoff: bad site key \"" + key + "\"");
            }
            coords.push_back(c.get<int>());
        }
    } else {
        throw ParseError("payoff: bad site key \"" + key + "\"");
    }
    if (static_cast<int>(coords.size()) != dimension) {
        throw DimensionMismatch("payoff: site " + key + " has " +
                                std::to_string(coords.size()) +
                                " coordinates, expected " + std::to_string(dimension));
    }
    return Site(std::move(coords));
}

}  // namespace

LatticeFunction payoff_from_json(const nlohmann::json& doc, int dimension) {
    if (!doc.is_object()) throw ParseError("payoff: top level must be a JSON object");
    LatticeFunction f = LatticeFunction::upper();
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_string()) {
            throw ParseError("payoff: value for " + key + " must be a rational string");
        }
        f.set(site_from_key(key, dimension), parse_rational(value.get<std::string>()));
    }
    return f;
}

nlohmann::json payoff_to_json(const LatticeFunction& f) {
    nlohmann::json doc = nlohmann::json::object();
    for (const auto& [site, value] : f.values()) {
        std::string key = site.dimension() == 1 ? std::to_string(site.coords[0])
                                                : to_string(site);
        doc[key] = to_string(value);
    }
    return doc;
}

LatticeFunction load_payoff_file(const std::string& path, int dimension) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open payoff file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("payoff file " + path + ": " + e.what());
    }
    return payoff_from_json(doc, dimension);
}

}  // namespace cnt
