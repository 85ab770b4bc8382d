#ifndef LINSTAT_KERNEL_HPP
#define LINSTAT_KERNEL_HPP

#include <span>
#include <vector>

#include "linstat/chebyshev.hpp"
#include "linstat/weight.hpp"

namespace linstat {

/// Symmetric kernel of the variance quadratic form,
///   V = prefactor * sum_{m,n=1}^{K} c_m c_n R(m,n),
/// with 1-based indices m,n and the weight-specific prefactor
/// (1/4 arcsine and semicircle, 1/2 hard edge, 1 Jacobi). The arcsine
/// kernel is diagonal, R(n,n) = n.
struct KernelMatrix {
    WeightSpec weight;
    int size = 0;                 // K
    double prefactor = 1.0;
    std::vector<double> entries;  // row-major K*K

    double at(int m, int n) const;  // 1-based
};

/// Semicircle kernel entry. Zero for mixed parity; otherwise with
/// s = min(m,n): s^2 + 2s for even pairs, (s+1)^2 for odd pairs.
double kernel_w2(int m, int n);

/// Hard-edge kernel entry on 0 < a < b. With s = min(m,n):
///   mixed parity: (b-a)(s^2+s)
///   both even:    (b+a)s^2 + (sqrt b + sqrt a)^2 s
///   both odd:     (b+a)s^2 + (sqrt b + sqrt a)^2 s + 2 sqrt(ab)
double kernel_w3(int m, int n, double a, double b);

/// Jacobi-type kernel entry on 0 < a < b < 1. With s = min(m,n),
/// r = sqrt((1-a)(1-b)), q = sqrt(ab):
///   mixed parity: 2s(b-a)[r - q - sa - sb + s]
///   both even:    2s(a+b)r - 2sq(a+b-2) - 2s^2(a^2+b^2-a-b)
///   both odd:     2r(sa+sb+2q) - 2sq(a+b-2) - 2s^2(a^2+b^2-a-b)
/// plus n(a-b)^2 on the diagonal m = n.
double kernel_w4(int m, int n, double a, double b);

/// Dense symmetric kernel for indices 1..K. K = 0 yields an empty matrix.
KernelMatrix build_kernel(const WeightSpec& weight, int K);

/// prefactor * sum_{m,n>=1} c_m c_n R(m,n); c_0 never enters. The
/// expansion must be in the kernel's weight basis on the same interval and
/// provide at least K+1 coefficients.
double variance_quadratic(const BasisExpansion& c, const KernelMatrix& R);

/// Arcsine-weight closed form (1/4) sum_{n>=1} n c_n^2 for a That
/// expansion; independent of c_0.
double variance_w1(const BasisExpansion& c);

/// Upper-triangular change of coordinates c = T d under which the variance
/// becomes sum_n n d_n^2. Diagonal of T is strictly positive.
struct DiagonalTransform {
    int size = 0;
    std::vector<double> entries;  // row-major K*K, upper triangular

    double at(int i, int j) const;  // 1-based

    /// Solve T d = c by back-substitution (c = c_1..c_K).
    std::vector<double> solve(std::span<const double> c) const;
};

/// Semicircle transform: ones on the diagonal, -1 on the second
/// superdiagonal.
DiagonalTransform transform_w2(int K);

/// Hard-edge transform: Toeplitz upper triangular with
///   T[i][i]   = 1/(sqrt b + sqrt a)
///   T[i][i+1] = -(sqrt b - sqrt a)/(sqrt b + sqrt a)^2
///   T[i][i+j] = (-1)^{j+1} 4 sqrt(ab) (sqrt b - sqrt a)^{j-2}
///               / (sqrt b + sqrt a)^{j+1},   j >= 2.
DiagonalTransform transform_w3(int K, double a, double b);

/// Diagonalize any of the kernels: LDL^T of M = prefactor * R, then
/// T = L^{-T} S with S_nn = sqrt(n / D_nn), giving T^T M T = diag(1..K).
/// A congruence of this shape (upper triangular, positive diagonal) is
/// unique, so for the semicircle and hard-edge kernels this reproduces the
/// closed-form transforms. Throws NumericalError on a non-positive pivot.
DiagonalTransform diagonalize_general(const KernelMatrix& R);

/// The transform used for a given weight: the closed forms where they
/// exist (arcsine c = 2d, semicircle, hard edge) and the general LDL
/// congruence for the Jacobi-type weight.
DiagonalTransform weight_transform(const WeightSpec& weight, int K);

}  // namespace linstat

#endif
