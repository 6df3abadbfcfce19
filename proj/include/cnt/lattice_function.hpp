// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>

#include <nlohmann/json_fwd.hpp>

#include "cnt/rational.hpp"
#include "cnt/site.hpp"

namespace cnt {

enum class Region { Upper, Lower };

/// A finitely supported rational-valued function on Z^d whose support is
/// confined to one side of the boundary. Boundary sites never carry nonzero
/// values; zero assignments are dropped so the stored map is the support.
class LatticeFunction {
  public:
    explicit LatticeFunction(Region region) : region_(region) {}
    static LatticeFunction upper() { return LatticeFunction(Region::Upper); }
    static LatticeFunction lower() { return LatticeFunction(Region::Lower); }

    Region region() const { return region_; }

    /// Throws RegionViolation when value != 0 and z is outside the region.
    void set(const Site& z, Rational value);

    /// 0 off the support.
    Rational at(const Site& z) const;

    const std::map<Site, Rational>& values() const { return values_; }
    bool empty() const { return values_.empty(); }

  private:
    Region region_;
    std::map<Site, Rational> values_;
};

/// Payoff file schema: a JSON object mapping a site key to a rational string.
/// The key is the JSON rendering of the site: an integer for d = 1 ("3") or
/// an array otherwise ("[1,2]"). The region is always Upper for user payoffs.
LatticeFunction payoff_from_json(const nlohmann::json& doc, int dimension);
nlohmann::json payoff_to_json(const LatticeFunction& f);
LatticeFunction load_payoff_file(const std::string& path, int dimension);

}  // namespace cnt
