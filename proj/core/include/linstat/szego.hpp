#ifndef LINSTAT_SZEGO_HPP
#define LINSTAT_SZEGO_HPP

#include <vector>

#include "linstat/chebyshev.hpp"
#include "linstat/poly.hpp"
#include "linstat/weight.hpp"

namespace linstat {

/// Spectral factorization h(e^{i theta}) = A e^{i theta} + B of
/// rho(cos theta) = cos theta + (b+a)/(b-a) for the hard-edge weight.
/// Satisfies 2AB = 1 and A^2 + B^2 = (b+a)/(b-a), with B > 0 and
/// h(z) != 0 in |z| < 1.
struct SzegoConstantsW3 {
    double A;
    double B;
};

/// Factorization h(e^{i theta}) = A e^{2 i theta} + B e^{i theta} + C of
/// eta(cos theta) for the Jacobi-type weight. Satisfies
///   4AC = (a-b)/2,
///   2(A+C)B = 1-a-b,
///   (A-C)^2 + B^2 = (a+b)(a+b-2)/(2(a-b)),
/// with C > 0 and h(z) != 0 in |z| < 1.
struct SzegoConstantsW4 {
    double A;
    double B;
    double C;
};

SzegoConstantsW3 w3_constants(double a, double b);  // requires 0 < a < b
SzegoConstantsW4 w4_constants(double a, double b);  // requires 0 < a < b < 1

/// Phat_n(x), the paper-normalized orthogonal polynomial for the hard-edge
/// or Jacobi-type weight. Exact degree n with positive leading coefficient.
/// Hard edge:  Phat_n = 2(x+sqrt(ab))/(sqrt b + sqrt a) Uhat_n - (sqrt b - sqrt a) That_{n+1}
/// Jacobi:     Phat_n = A' Uhat_{n-2} + B' Uhat_{n-1} + C' Uhat_n
/// with A' = (sqrt b - sqrt a)(sqrt(1-b) - sqrt(1-a)),
///      B' = 2(sqrt(b(1-b)) - sqrt(a(1-a))),
///      C' = (sqrt b + sqrt a)(sqrt(1-b) + sqrt(1-a)),
/// using the extended indices Uhat_{-1} = 0, Uhat_{-2} = -1.
double eval_phat(const WeightSpec& weight, int n, double x);

/// d/dx Phat_n(x) via the closed forms built on
/// U_n'(tau) = [(n+1) U_{n-1}(tau) - n tau U_n(tau)]/(1-tau^2),
/// so x must lie strictly inside (a,b). n >= 1.
double eval_phat_deriv(const WeightSpec& weight, int n, double x);

/// Monomial coefficients of Phat_0..Phat_{count-1}. For the hard-edge
/// weight the degree-(n+1) terms of the Uhat/That combination cancel
/// identically; the cancelled coefficient is checked to be negligible and
/// dropped.
std::vector<Poly> phat_polys(const WeightSpec& weight, int count);

/// Expand f in the Phat basis by exact triangular change of basis.
BasisExpansion expand_in_phat(const Poly& f, const WeightSpec& weight);

}  // namespace linstat

#endif
