#ifndef LINSTAT_CHEBYSHEV_HPP
#define LINSTAT_CHEBYSHEV_HPP

#include <vector>

#include "linstat/poly.hpp"

namespace linstat {

enum class ChebKind { First, Second };  // T_n, U_n

/// T_n(tau) or U_n(tau) by forward three-term recurrence. tau may lie
/// anywhere on the real line. Negative indices follow the standard
/// extension compatible with the recurrence:
///   T_{-n} = T_n,   U_{-1} = 0,   U_{-n-2} = -U_n.
double eval_cheb(ChebKind kind, int n, double tau);

/// Translated polynomial That_n(x) = T_n(tau(x)) (resp. Uhat_n) on [a,b].
double eval_translated(ChebKind kind, int n, double x, const AffineMap& map);

/// Monomial coefficients of That_0..That_{count-1} (resp. Uhat), built by
/// the recurrence on coefficient vectors. Column n has exact degree n.
std::vector<Poly> cheb_basis_polys(ChebKind kind, const AffineMap& map, int count);

enum class Basis { ChebT, ChebU, SzegoHardEdge, SzegoJacobi };

/// Coefficients c_0..c_K of a polynomial in one of the orthogonal bases on
/// an interval: f(x) = sum c_n B_n(x) with B_n of exact degree n.
struct BasisExpansion {
    Basis basis;
    AffineMap interval;
    std::vector<double> coeffs;

    int max_index() const { return static_cast<int>(coeffs.size()) - 1; }
    double coeff(int n) const;  // 0 outside the stored range
};

/// Expand f in the That or Uhat basis by exact triangular change of basis
/// (no quadrature involved).
BasisExpansion monomial_to_cheb(const Poly& f, ChebKind kind, const AffineMap& map);

/// Derivative of a That expansion, expressed in the Uhat basis:
/// d/dx That_n = n * (2/(b-a)) * Uhat_{n-1}. A constant input yields the
/// zero expansion.
BasisExpansion derivative_in_u(const BasisExpansion& t_expansion);

}  // namespace linstat

#endif
