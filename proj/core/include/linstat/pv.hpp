#ifndef LINSTAT_PV_HPP
#define LINSTAT_PV_HPP

#include "linstat/poly.hpp"
#include "linstat/weight.hpp"

namespace linstat {

// Principal-value integrals of Chebyshev polynomials against the two
// square-root weights, each in a closed form and an independent numeric
// form. The numeric forms regularize by singularity subtraction: with
// polynomial g the integrand (g(t)-g(tau))/(tau-t) is again a polynomial,
// so the Gauss-Chebyshev rules evaluate the regular part exactly and the
// subtracted pole reduces to a known moment of the bare weight. No PV
// tolerance parameter exists anywhere on this path.

/// PV int_{-1}^{1} sqrt(1-t^2) U_{n-1}(t)/(tau-t) dt = pi T_n(tau),
/// n >= 1, -1 < tau < 1.
double pv_cauchy_u(int n, double tau);
double pv_cauchy_u_numeric(int n, double tau);

/// PV int_{-1}^{1} U_{n-1}(t) / (sqrt(1-t^2)(tau-t)) dt
///   = pi T_n(tau)/(1-tau^2) - pi/(2(1-tau)) - (-1)^n pi/(2(1+tau)),
/// n >= 1.
double pv_prin(int n, double tau);
double pv_prin_numeric(int n, double tau);

/// PV int_{-1}^{1} t U_n(t) / (sqrt(1-t^2)(tau-t)) dt
///   = pi tau T_{n+1}(tau)/(1-tau^2) - pi/(2(1-tau)) - (-1)^n pi/(2(1+tau)),
/// n >= 0 (the n = 0 case is needed when assembling the hard-edge kernel
/// integrands).
double pv_next(int n, double tau);
double pv_next_numeric(int n, double tau);

/// Moments of U against the three companion weights:
///   OnePlusT   int (1+t) U_{n-1}(t)/sqrt(1-t^2) dt = pi,             n >= 1
///   OneMinusT  int (1-t) U_{n-1}(t)/sqrt(1-t^2) dt = (-1)^{n-1} pi,  n >= 1
///   Plain      int U_n(t)/sqrt(1-t^2) dt = (1+(-1)^n) pi/2,          n >= 0
enum class UMomentKind { OnePlusT, OneMinusT, Plain };

double u_moment(UMomentKind which, int n);
double u_moment_numeric(UMomentKind which, int n);

/// PV int_a^b sqrt((b-y)(y-a)) fprime(y)/(x-y) dy for a < x < b, by
/// singularity subtraction. The subtracted pole contributes
/// fprime(x) * pi * (x - (a+b)/2); the remaining integrand is polynomial
/// times the semicircle weight and is integrated exactly. num_nodes < 0
/// selects the default deg(fprime) + 8.
double inner_pv(const Poly& fprime, double x, const AffineMap& interval, int num_nodes = -1);

/// The master variance formula evaluated numerically:
///   V = 1/(2 pi^2) int_a^b dx f(x)/sqrt((b-x)(x-a))
///                    PV int_a^b dy sqrt((b-y)(y-a)) f'(y)/(x-y).
/// Depends only on the interval (a,b), never on the weight kind; the
/// overload taking a WeightSpec uses its interval. The outer integrand is
/// polynomial over the arcsine weight, so the default 4K+16 first-kind
/// nodes make the result exact up to roundoff. outer_nodes < 0 selects the
/// default.
double variance_oracle(const Poly& f, const AffineMap& interval, int outer_nodes = -1);
double variance_oracle(const Poly& f, const WeightSpec& weight, int outer_nodes = -1);

}  // namespace linstat

#endif
