#ifndef LINSTAT_EXPANSION_HPP
#define LINSTAT_EXPANSION_HPP

#include <vector>

#include "linstat/chebyshev.hpp"
#include "linstat/poly.hpp"
#include "linstat/weight.hpp"

namespace linstat {

/// Basis used to expand test functions under a given weight:
/// arcsine -> That, semicircle -> Uhat, hard-edge/Jacobi -> Phat.
Basis basis_for(WeightKind kind);

/// Monomial coefficients of the first `count` basis polynomials for the
/// weight's basis.
std::vector<Poly> basis_polys(const WeightSpec& weight, int count);

/// Expand f in the weight's orthogonal basis (triangular solve in all
/// four cases).
BasisExpansion expand_in_weight_basis(const Poly& f, const WeightSpec& weight);

double eval_expansion(const BasisExpansion& e, double x);

/// Reconstruct the monomial form of an expansion.
Poly expansion_to_monomial(const BasisExpansion& e);

}  // namespace linstat

#endif
