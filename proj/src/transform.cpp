// SPDX-License-Identifier: Apache-2.0
#include "cnt/transform.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include <nlohmann/json.hpp>

#include "cnt/errors.hpp"

namespace cnt {

TriangularSystem::TriangularSystem(SupportSet index, Sign sign, std::vector<Rational> entries)
    : index_(std::move(index)), sign_(sign), entries_(std::move(entries)) {
    const auto n = static_cast<std::size_t>(index_.size());
    if (entries_.size() != n * n) {
        throw Error("TriangularSystem: expected " + std::to_string(n * n) +
                    " entries, got " + std::to_string(entries_.size()));
    }
}

const Rational& TriangularSystem::at(int row, int col) const {
    return entries_[static_cast<std::size_t>(row) * index_.size() +
                    static_cast<std::size_t>(col)];
}

namespace {

/// Upper sample site z + u e_d (Plus) or lower sample site z - u e_d (Minus).
Site sample_site(const SupportPoint& p, Sign sign, int d) {
    return shifted(p.y, d, sign == Sign::Plus ? p.s : -p.s);
}

void require_upper(const LatticeFunction& f) {
    if (f.region() != Region::Upper) {
        throw RegionViolation("payoff must be supported in the upper region");
    }
}

int permutation_parity(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? +1 : -1;
}

}  // namespace

TriangularSystem build_system(EvolveCache& cache, int t, const Site& x, Sign sign) {
    const SupportSet set = support_set(t, x);  // throws InvalidAnchor
    const int n = set.size();
    const int d = x.dimension();

    std::vector<Rational> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : set.points) {
        const Measure& law = cache.law(row.y, row.s);
        for (const auto& col : set.points) {
            entries.push_back(law.at(sample_site(col, sign, d)));
        }
    }
    return TriangularSystem(set, sign, std::move(entries));
}

TriangularSystem build_system(const StepKernel& kernel, int t, const Site& x, Sign sign) {
    EvolveCache cache(kernel);
    return build_system(cache, t, x, sign);
}

Rational determinant(const TriangularSystem& system) {
    Rational det = 1;
    for (int i = 0; i < system.size(); ++i) det *= system.diagonal(i);
    return det;
}

Rational determinant_by_expansion(const TriangularSystem& system) {
    const int n = system.size();
    if (n > 7) {
        throw TooLarge("permutation expansion refused for size " + std::to_string(n));
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Rational det = 0;
    do {
        Rational term = permutation_parity(perm);
        for (int col = 0; col < n && term != 0; ++col) {
            term *= system.at(perm[static_cast<std::size_t>(col)], col);
        }
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

std::vector<Rational> local_transform(const TriangularSystem& plus,
                                      const TriangularSystem& minus,
                                      const LatticeFunction& f) {
    require_upper(f);
    const SupportSet& set = plus.index();
    const int n = set.size();
    const int d = set.x.dimension();

    // v = W^+ applied to f sampled at the upper sites z + u e_d.
    std::vector<Rational> upper_samples;
    upper_samples.reserve(static_cast<std::size_t>(n));
    for (const auto& p : set.points) {
        upper_samples.push_back(f.at(sample_site(p, Sign::Plus, d)));
    }
    std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (upper_samples[static_cast<std::size_t>(j)] != 0) {
                v[static_cast<std::size_t>(i)] +=
                    plus.at(i, j) * upper_samples[static_cast<std::size_t>(j)];
            }
        }
    }

    // Forward substitution of W^- g = v.
    std::vector<Rational> g(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i) {
        Rational acc = v[static_cast<std::size_t>(i)];
        for (int j = 0; j < i; ++j) {
            if (g[static_cast<std::size_t>(j)] != 0) {
                acc -= minus.at(i, j) * g[static_cast<std::size_t>(j)];
            }
        }
        g[static_cast<std::size_t>(i)] = acc / minus.diagonal(i);
    }
    return g;
}

std::vector<Rational> local_transform(EvolveCache& cache, int t, const Site& x,
                                      const LatticeFunction& f) {
    require_upper(f);
    const auto plus = build_system(cache, t, x, Sign::Plus);
    const auto minus = build_system(cache, t, x, Sign::Minus);
    return local_transform(plus, minus, f);
}

std::vector<Rational> local_transform(const StepKernel& kernel, int t, const Site& x,
                                      const LatticeFunction& f) {
    EvolveCache cache(kernel);
    return local_transform(cache, t, x, f);
}

Rational transform_at(EvolveCache& cache, const Site& target, const LatticeFunction& f) {
    if (!in_lower(target)) {
        throw RegionViolation("transform target " + to_string(target) +
                              " must lie strictly below the boundary");
    }
    const int t = -target.barrier_coord();
    const Site x = project_to_boundary(target);
    // The anchor entry is last in canonical order.
    return local_transform(cache, t, x, f).back();
}

Rational transform_at(const StepKernel& kernel, const Site& target, const LatticeFunction& f) {
    EvolveCache cache(kernel);
    return transform_at(cache, target, f);
}

Rational CoefficientTable::apply(const LatticeFunction& f) const {
    const int d = index.x.dimension();
    Rational sum = 0;
    for (int i = 0; i < index.size(); ++i) {
        if (coeffs[static_cast<std::size_t>(i)] != 0) {
            sum += coeffs[static_cast<std::size_t>(i)] *
                   f.at(sample_site(index.points[static_cast<std::size_t>(i)], Sign::Plus, d));
        }
    }
    return sum;
}

CoefficientTable cramer_coefficients(const StepKernel& kernel, int t, const Site& x,
                                     bool force) {
    EvolveCache cache(kernel);
    const auto plus = build_system(cache, t, x, Sign::Plus);
    const auto minus = build_system(cache, t, x, Sign::Minus);
    const SupportSet& set = plus.index();
    const int n = set.size();
    if (n > 8 && !force) {
        throw TooLarge("cramer_coefficients refused for |S| = " + std::to_string(n) +
                       " (" + std::to_string(n) + "! permutation terms); set force to override");
    }

    // Normalizer: product over S(t,x) of P(Z_l^w = w - l e_d), the Minus diagonal.
    const Rational norm = determinant(minus);
    const int anchor = n - 1;

    CoefficientTable table{set, std::vector<Rational>(static_cast<std::size_t>(n), Rational(0))};
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // Shared part: the Minus entries of all non-anchor columns under sigma.
        Rational shared = permutation_parity(perm);
        for (int col = 0; col < n && shared != 0; ++col) {
            if (col == anchor) continue;
            shared *= minus.at(perm[static_cast<std::size_t>(col)], col);
        }
        if (shared == 0) continue;
        // The anchor column contributes the Plus entry at row sigma(anchor),
        // one term per target column (s, y).
        for (int i = 0; i < n; ++i) {
            const Rational& plus_entry = plus.at(perm[static_cast<std::size_t>(anchor)], i);
            if (plus_entry != 0) {
                table.coeffs[static_cast<std::size_t>(i)] += shared * plus_entry;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (auto& c : table.coeffs) c /= norm;
    return table;
}

CoefficientTable coefficients_via_solve(EvolveCache& cache, int t, const Site& x) {
    const auto plus = build_system(cache, t, x, Sign::Plus);
    const auto minus = build_system(cache, t, x, Sign::Minus);
    const SupportSet& set = plus.index();
    const int n = set.size();
    const int d = set.x.dimension();

    CoefficientTable table{set, std::vector<Rational>(static_cast<std::size_t>(n), Rational(0))};
    for (int i = 0; i < n; ++i) {
        LatticeFunction unit = LatticeFunction::upper();
        unit.set(sample_site(set.points[static_cast<std::size_t>(i)], Sign::Plus, d), 1);
        table.coeffs[static_cast<std::size_t>(i)] = local_transform(plus, minus, unit).back();
    }
    return table;
}

CoefficientTable coefficients_via_solve(const StepKernel& kernel, int t, const Site& x) {
    EvolveCache cache(kernel);
    return coefficients_via_solve(cache, t, x);
}

nlohmann::json coefficients_to_json(const CoefficientTable& table) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int i = 0; i < table.index.size(); ++i) {
        const auto& p = table.index.points[static_cast<std::size_t>(i)];
        coeffs.push_back({{"s", p.s},
                          {"y", p.y.coords},
                          {"c", to_string(table.coeffs[static_cast<std::size_t>(i)])}});
    }
    return {{"t", table.index.t}, {"x", table.index.x.coords}, {"coeffs", coeffs}};
}

nlohmann::json system_to_json(const TriangularSystem& system) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < system.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < system.size(); ++j) row.push_back(to_string(system.at(i, j)));
        rows.push_back(row);
    }
    return {{"index", support_set_to_json(system.index())},
            {"sign", system.sign() == Sign::Plus ? "+" : "-"},
            {"entries", rows}};
}

}  // namespace cnt
