// SPDX-License-Identifier: Apache-2.0
#include "cnt/kernel.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "cnt/errors.hpp"

namespace cnt {

const std::vector<Rational>& StepKernel::probs_at(const Site& z) const {
    const auto it = overrides.find(z);
    return it != overrides.end() ? it->second : default_probs;
}

namespace {

void check_probability_vector(const std::optional<Site>& site, int dimension,
                              const std::vector<Rational>& probs,
                              std::vector<Violation>& out) {
    if (static_cast<int>(probs.size()) != 2 * dimension) {
        out.push_back({ViolationKind::DimensionMismatch, site, std::nullopt,
                       "expected " + std::to_string(2 * dimension) +
                           " probabilities, got " + std::to_string(probs.size())});
        return;
    }
    Rational sum = 0;
    for (int i = 0; i < 2 * dimension; ++i) {
        if (probs[i] <= 0) {
            out.push_back({ViolationKind::NondegeneracyViolation, site,
                           Direction::from_index(i),
                           "probability " + to_string(probs[i]) + " is not > 0"});
        }
        sum += probs[i];
    }
    if (sum != 1) {
        out.push_back({ViolationKind::MassViolation, site, std::nullopt,
                       "probabilities sum to " + to_string(sum)});
    }
}

}  // namespace

ValidationReport validate_kernel(const StepKernel& kernel) {
    ValidationReport report;
    if (kernel.dimension < 1) {
        report.violations.push_back({ViolationKind::DimensionMismatch, std::nullopt,
                                     std::nullopt,
                                     "dimension must be >= 1, got " +
                                         std::to_string(kernel.dimension)});
        return report;
    }
    check_probability_vector(std::nullopt, kernel.dimension, kernel.default_probs,
                             report.violations);
    for (const auto& [site, probs] : kernel.overrides) {
        if (site.dimension() != kernel.dimension) {
            report.violations.push_back({ViolationKind::DimensionMismatch, site,
                                         std::nullopt,
                                         "override site has dimension " +
                                             std::to_string(site.dimension())});
            continue;
        }
        check_probability_vector(site, kernel.dimension, probs, report.violations);
    }
    return report;
}

Rational step_probability(const StepKernel& kernel, const Site& site, const Direction& dir) {
    if (site.dimension() != kernel.dimension) {
        throw DimensionMismatch("step_probability: site " + to_string(site) +
                                " vs kernel dimension " + std::to_string(kernel.dimension));
    }
    if (dir.axis < 1 || dir.axis > kernel.dimension) {
        throw DimensionMismatch("step_probability: direction " + to_string(dir) +
                                " out of range for dimension " +
                                std::to_string(kernel.dimension));
    }
    return kernel.probs_at(site)[dir.index()];
}

bool is_reflection_symmetric(const StepKernel& kernel, int horizon, const Site& base) {
    if (base.dimension() != kernel.dimension) {
        throw DimensionMismatch("is_reflection_symmetric: base site dimension mismatch");
    }
    if (!on_boundary(base)) {
        throw InvalidAnchor("is_reflection_symmetric: base " + to_string(base) +
                            " is not on the boundary");
    }
    const int d = kernel.dimension;
    // Walk the L1 ball of radius `horizon` around base.
    Site z = base;
    const auto probe = [&](const Site& site) {
        const auto& here = kernel.probs_at(site);
        const auto& mirror = kernel.probs_at(reflect(site));
        for (int i = 0; i < 2 * d; ++i) {
            const Direction dir = Direction::from_index(i);
            if (here[i] != mirror[dir.reflected(d).index()]) return false;
        }
        return true;
    };
    // Recursive coordinate sweep, lexicographic.
    const auto sweep = [&](const auto& self, int axis, int budget) -> bool {
        if (axis == d + 1) return probe(z);
        for (int delta = -budget; delta <= budget; ++delta) {
            z.coords[axis - 1] = base.coords[axis - 1] + delta;
            if (!self(self, axis + 1, budget - std::abs(delta))) return false;
        }
        z.coords[axis - 1] = base.coords[axis - 1];
        return true;
    };
    return sweep(sweep, 1, horizon);
}

StepKernel make_kernel(int dimension, std::vector<Rational> default_probs) {
    StepKernel k;
    k.dimension = dimension;
    k.default_probs = std::move(default_probs);
    return k;
}

StepKernel uniform_kernel(int dimension) {
    return make_kernel(dimension,
                       std::vector<Rational>(2 * dimension, Rational(1, 2 * dimension)));
}

StepKernel bias_kernel_1d(const Rational& p_up) {
    return make_kernel(1, {p_up, 1 - p_up});
}

namespace {

using nlohmann::json;

std::vector<Rational> probs_from_json(const json& obj, int dimension,
                                      const std::string& where) {
    if (!obj.is_object()) {
        throw ParseError(where + ": direction map must be a JSON object");
    }
    std::vector<Rational> probs(2 * static_cast<std::size_t>(dimension), Rational(0));
    std::vector<bool> seen(2 * static_cast<std::size_t>(dimension), false);
    for (const auto& [key, value] : obj.items()) {
        const Direction dir = parse_direction(key);
        if (dir.axis > dimension) {
            throw DimensionMismatch(where + ": direction " + key +
                                    " out of range for dimension " +
                                    std::to_string(dimension));
        }
        if (!value.is_string()) {
            throw ParseError(where + ": probability for " + key + " must be a string");
        }
        probs[dir.index()] = parse_rational(value.get<std::string>());
        seen[dir.index()] = true;
    }
    for (int i = 0; i < 2 * dimension; ++i) {
        if (!seen[i]) {
            throw ParseError(where + ": missing direction " +
                             to_string(Direction::from_index(i)));
        }
    }
    return probs;
}

Site site_from_json(const json& arr, int dimension, const std::string& where) {
    if (!arr.is_array()) {
        throw ParseError(where + ": site must be a JSON array of integers");
    }
    std::vector<int> coords;
    for (const auto& c : arr) {
        if (!c.is_number_integer()) {
            throw ParseError(where + ": site coordinates must be integers");
        }
        coords.push_back(c.get<int>());
    }
    if (static_cast<int>(coords.size()) != dimension) {
        throw DimensionMismatch(where + ": site has " + std::to_string(coords.size()) +
                                " coordinates, kernel dimension is " +
                                std::to_string(dimension));
    }
    return Site(std::move(coords));
}

}  // namespace

StepKernel kernel_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ParseError("kernel: top level must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "dimension" && key != "default" && key != "overrides") {
            throw ParseError("kernel: unknown key \"" + key + "\"");
        }
    }
    if (!doc.contains("dimension") || !doc["dimension"].is_number_integer()) {
        throw ParseError("kernel: missing integer \"dimension\"");
    }
    const int d = doc["dimension"].get<int>();
    if (d < 1) throw ParseError("kernel: dimension must be >= 1");
    if (!doc.contains("default")) throw ParseError("kernel: missing \"default\"");

    StepKernel kernel;
    kernel.dimension = d;
    kernel.default_probs = probs_from_json(doc["default"], d, "kernel default");

    if (doc.contains("overrides")) {
        if (!doc["overrides"].is_array()) {
            throw ParseError("kernel: \"overrides\" must be an array");
        }
        for (const auto& entry : doc["overrides"]) {
            if (!entry.is_object()) throw ParseError("kernel: override must be an object");
            for (const auto& [key, value] : entry.items()) {
                (void)value;
                if (key != "site" && key != "probs") {
                    throw ParseError("kernel: unknown override key \"" + key + "\"");
                }
            }
            if (!entry.contains("site") || !entry.contains("probs")) {
                throw ParseError("kernel: override needs \"site\" and \"probs\"");
            }
            Site site = site_from_json(entry["site"], d, "kernel override");
            if (kernel.overrides.count(site)) {
                throw ParseError("kernel: duplicate override for site " + to_string(site));
            }
            kernel.overrides[site] =
                probs_from_json(entry["probs"], d, "kernel override " + to_string(site));
        }
    }
    return kernel;
}

nlohmann::json kernel_to_json(const StepKernel& kernel) {
    json probs_obj = json::object();
    for (int i = 0; i < 2 * kernel.dimension; ++i) {
        probs_obj[to_string(Direction::from_index(i))] = to_string(kernel.default_probs[i]);
    }
    json doc{{"dimension", kernel.dimension}, {"default", probs_obj}};
    json overrides = json::array();
    for (const auto& [site, probs] : kernel.overrides) {
        json entry{{"site", site.coords}, {"probs", json::object()}};
        for (int i = 0; i < 2 * kernel.dimension; ++i) {
            entry["probs"][to_string(Direction::from_index(i))] = to_string(probs[i]);
        }
        overrides.push_back(entry);
    }
    if (!overrides.empty()) doc["overrides"] = overrides;
    return doc;
}

StepKernel load_kernel_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open kernel file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError("kernel file " + path + ": " + e.what());
    }
    return kernel_from_json(doc);
}

nlohmann::json validation_report_to_json(const ValidationReport& report) {
    json doc{{"ok", report.ok()}, {"violations", json::array()}};
    for (const auto& v : report.violations) {
        json entry;
        switch (v.kind) {
            case ViolationKind::MassViolation: entry["kind"] = "mass"; break;
            case ViolationKind::NondegeneracyViolation: entry["kind"] = "nondegeneracy"; break;
            case ViolationKind::DimensionMismatch: entry["kind"] = "dimension"; break;
        }
        if (v.site) entry["site"] = v.site->coords;
        if (v.direction) entry["direction"] = to_string(*v.direction);
        entry["detail"] = v.detail;
        doc["violations"].push_back(entry);
    }
    return doc;
}

}  // namespace cnt
