// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cnt/distribution.hpp"
#include "cnt/kernel.hpp"
#include "cnt/lattice.hpp"
#include "cnt/lattice_function.hpp"
#include "cnt/rational.hpp"

namespace cnt {

enum class Sign { Plus, Minus };

/// The square matrix W^+_{t,x} or W^-_{t,x} over S(t, x) in canonical order:
/// entry[(s,y), (u,z)] = P(Z_s^y = z +- u e_d). Entries are stored dense so
/// triangularity is a checkable property, not a storage assumption; in
/// canonical order the matrix is lower triangular with strictly positive
/// diagonal P(Z_s^y = y +- s e_d).
class TriangularSystem {
  public:
    TriangularSystem(SupportSet index, Sign sign, std::vector<Rational> entries);

    const SupportSet& index() const { return index_; }
    Sign sign() const { return sign_; }
    int size() const { return index_.size(); }

    const Rational& at(int row, int col) const;
    const Rational& diagonal(int i) const { return at(i, i); }

  private:
    SupportSet index_;
    Sign sign_;
    std::vector<Rational> entries_;  // row-major, size n*n
};

TriangularSystem build_system(const StepKernel& kernel, int t, const Site& x, Sign sign);
TriangularSystem build_system(EvolveCache& cache, int t, const Site& x, Sign sign);

/// det W^{+-}_{t,x}: the product of the diagonal entries. Strictly positive.
Rational determinant(const TriangularSystem& system);

/// Full signed permutation expansion over Sym(S(t,x)). Independent check of
/// determinant(); refuses systems larger than 7 (factorial cost).
Rational determinant_by_expansion(const TriangularSystem& system);

/// Applies the local transform N_{t,x} = (W^-)^{-1} W^+ to an Upper payoff:
/// returns g over S(t, x) in canonical order, g[(s,y)] = (N_{t,x} f)(y - s e_d).
/// Computed as v = W^+ f restricted to the upper sample sites, then forward
/// substitution of the Minus system; the residual W^- g - v vanishes exactly.
std::vector<Rational> local_transform(const StepKernel& kernel, int t, const Site& x,
                                      const LatticeFunction& f);
std::vector<Rational> local_transform(EvolveCache& cache, int t, const Site& x,
                                      const LatticeFunction& f);
std::vector<Rational> local_transform(const TriangularSystem& plus,
                                      const TriangularSystem& minus,
                                      const LatticeFunction& f);

/// The global transform Nf evaluated at a single lower site: anchors at the
/// smallest valid system, t = -target_d and x = target projected to the
/// boundary. Any larger nested anchor gives the same value.
Rational transform_at(const StepKernel& kernel, const Site& target, const LatticeFunction& f);
Rational transform_at(EvolveCache& cache, const Site& target, const LatticeFunction& f);

/// The weights c_{t,x}(s, y) expressing Nf(x - t e_d) as
/// sum over S(t,x) of c_{t,x}(s,y) * f(y + s e_d).
struct CoefficientTable {
    SupportSet index;
    std::vector<Rational> coeffs;  // canonical order

    Rational apply(const LatticeFunction& f) const;
};

/// Literal evaluation of the signed permutation-sum formula for every
/// coefficient. Factorial in |S(t,x)|; refuses |S| > 8 unless force is set.
CoefficientTable cramer_coefficients(const StepKernel& kernel, int t, const Site& x,
                                     bool force = false);

/// Same table computed by applying the local transform to each unit
/// indicator; polynomial cost. Agrees with cramer_coefficients everywhere
/// both run.
CoefficientTable coefficients_via_solve(const StepKernel& kernel, int t, const Site& x);
CoefficientTable coefficients_via_solve(EvolveCache& cache, int t, const Site& x);

/// {"t": ..., "x": [...], "coeffs": [{"s": ..., "y": [...], "c": "p/q"}]}
nlohmann::json coefficients_to_json(const CoefficientTable& table);

/// Dense row-major dump for debugging.
nlohmann::json system_to_json(const TriangularSystem& system);

}  // namespace cnt
