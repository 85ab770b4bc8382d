#include "linstat/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "linstat/errors.hpp"
#include "linstat/expansion.hpp"

namespace linstat {

namespace {

void require_indices(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("kernel indices must be >= 1");
}

double prefactor_for(WeightKind kind) {
    switch (kind) {
        case WeightKind::Arcsine:
        case WeightKind::Semicircle: return 0.25;
        case WeightKind::HardEdge: return 0.5;
        case WeightKind::Jacobi: return 1.0;
    }
    throw std::invalid_argument("bad weight kind");
}

}  // namespace

double KernelMatrix::at(int m, int n) const {
    if (m < 1 || n < 1 || m > size || n > size) {
        throw std::out_of_range("KernelMatrix::at: index out of range");
    }
    return entries[static_cast<size_t>(m - 1) * size + (n - 1)];
}

double kernel_w2(int m, int n) {
    require_indices(m, n);
    if ((m + n) % 2 == 1) return 0.0;
    const int si = std::min(m, n);
    const double s = si;
    return si % 2 == 0 ? s * s + 2.0 * s : (s + 1.0) * (s + 1.0);
}

double kernel_w3(int m, int n, double a, double b) {
    require_indices(m, n);
    if (!(0.0 < a && a < b)) throw std::invalid_argument("hard-edge requires 0 < a < b");
    const int si = std::min(m, n);
    const double s = si;
    if ((m + n) % 2 == 1) return (b - a) * (s * s + s);
    const double root_sum = std::sqrt(b) + std::sqrt(a);
    double v = (b + a) * s * s + root_sum * root_sum * s;
    if (si % 2 == 1) v += 2.0 * std::sqrt(a * b);
    return v;
}

double kernel_w4(int m, int n, double a, double b) {
    require_indices(m, n);
    if (!(0.0 < a && a < b && b < 1.0)) {
        throw std::invalid_argument("jacobi requires 0 < a < b < 1");
    }
    const int si = std::min(m, n);
    const double s = si;
    const double r = std::sqrt((1.0 - a) * (1.0 - b));
    const double q = std::sqrt(a * b);
    if ((m + n) % 2 == 1) {
        return 2.0 * s * (b - a) * (r - q - s * a - s * b + s);
    }
    double v;
    if (si % 2 == 0) {
        v = 2.0 * s * (a + b) * r - 2.0 * s * q * (a + b - 2.0) -
            2.0 * s * s * (a * a + b * b - a - b);
    } else {
        v = 2.0 * r * (s * a + s * b + 2.0 * q) - 2.0 * s * q * (a + b - 2.0) -
            2.0 * s * s * (a * a + b * b - a - b);
    }
    if (m == n) v += s * (a - b) * (a - b);
    return v;
}

KernelMatrix build_kernel(const WeightSpec& weight, int K) {
    if (K < 0) throw std::invalid_argument("build_kernel: K must be nonnegative");
    KernelMatrix R{weight, K, prefactor_for(weight.kind), {}};
    R.entries.assign(static_cast<size_t>(K) * K, 0.0);
    for (int m = 1; m <= K; ++m) {
        for (int n = 1; n <= K; ++n) {
            double v;
            switch (weight.kind) {
                case WeightKind::Arcsine: v = (m == n) ? static_cast<double>(n) : 0.0; break;
                case WeightKind::Semicircle: v = kernel_w2(m, n); break;
                case WeightKind::HardEdge: v = kernel_w3(m, n, weight.a, weight.b); break;
                case WeightKind::Jacobi: v = kernel_w4(m, n, weight.a, weight.b); break;
                default: throw std::invalid_argument("bad weight kind");
            }
            R.entries[static_cast<size_t>(m - 1) * K + (n - 1)] = v;
        }
    }
    return R;
}

double variance_quadratic(const BasisExpansion& c, const KernelMatrix& R) {
    if (c.basis != basis_for(R.weight.kind) || !(c.interval == R.weight.interval())) {
        throw std::invalid_argument(
            "variance_quadratic: expansion and kernel disagree on weight or interval");
    }
    if (c.max_index() < R.size) {
        throw std::invalid_argument("variance_quadratic: expansion shorter than kernel");
    }
    double acc = 0.0;
    for (int m = 1; m <= R.size; ++m) {
        for (int n = 1; n <= R.size; ++n) acc += c.coeffs[m] * c.coeffs[n] * R.at(m, n);
    }
    return R.prefactor * acc;
}

double variance_w1(const BasisExpansion& c) {
    if (c.basis != Basis::ChebT) {
        throw std::invalid_argument("variance_w1 expects a ChebT expansion");
    }
    double acc = 0.0;
    for (int n = 1; n <= c.max_index(); ++n) acc += n * c.coeffs[n] * c.coeffs[n];
    return 0.25 * acc;
}

double DiagonalTransform::at(int i, int j) const {
    if (i < 1 || j < 1 || i > size || j > size) {
        throw std::out_of_range("DiagonalTransform::at: index out of range");
    }
    return entries[static_cast<size_t>(i - 1) * size + (j - 1)];
}

std::vector<double> DiagonalTransform::solve(std::span<const double> c) const {
    if (static_cast<int>(c.size()) != size) {
        throw std::invalid_argument("DiagonalTransform::solve: length mismatch");
    }
    std::vector<double> d(c.begin(), c.end());
    for (int i = size; i >= 1; --i) {
        double v = d[i - 1];
        for (int j = i + 1; j <= size; ++j) v -= at(i, j) * d[j - 1];
        d[i - 1] = v / at(i, i);
    }
    return d;
}

DiagonalTransform transform_w2(int K) {
    if (K < 1) throw std::invalid_argument("transform_w2: K must be positive");
    DiagonalTransform T{K, std::vector<double>(static_cast<size_t>(K) * K, 0.0)};
    for (int i = 1; i <= K; ++i) {
        T.entries[static_cast<size_t>(i - 1) * K + (i - 1)] = 1.0;
        if (i + 2 <= K) T.entries[static_cast<size_t>(i - 1) * K + (i + 1)] = -1.0;
    }
    return T;
}

DiagonalTransform transform_w3(int K, double a, double b) {
    if (K < 1) throw std::invalid_argument("transform_w3: K must be positive");
    if (!(0.0 < a && a < b)) throw std::invalid_argument("hard-edge requires 0 < a < b");
    const double sa = std::sqrt(a), sb = std::sqrt(b);
    const double sum = sb + sa, diff = sb - sa;
    DiagonalTransform T{K, std::vector<double>(static_cast<size_t>(K) * K, 0.0)};
    for (int i = 1; i <= K; ++i) {
        for (int j = 0; i + j <= K; ++j) {
            double v;
            if (j == 0) {
                v = 1.0 / sum;
            } else if (j == 1) {
                v = -diff / (sum * sum);
            } else {
                v = (j % 2 == 0 ? -1.0 : 1.0) * 4.0 * std::sqrt(a * b) *
                    std::pow(diff, j - 2) / std::pow(sum, j + 1);
            }
            T.entries[static_cast<size_t>(i - 1) * K + (i + j - 1)] = v;
        }
    }
    return T;
}

DiagonalTransform diagonalize_general(const KernelMatrix& R) {
    const int K = R.size;
    // LDL^T of M = prefactor * R: L unit lower triangular, D diagonal.
    std::vector<double> L(static_cast<size_t>(K) * K, 0.0);
    std::vector<double> D(K, 0.0);
    auto l = [&](int i, int j) -> double& { return L[static_cast<size_t>(i) * K + j]; };
    for (int j = 0; j < K; ++j) {
        double dj = R.prefactor * R.at(j + 1, j + 1);
        for (int k = 0; k < j; ++k) dj -= l(j, k) * l(j, k) * D[k];
        if (!(dj > 0.0)) {
            throw NumericalError("diagonalize_general: kernel is not positive definite (pivot " +
                                 std::to_string(j + 1) + ")");
        }
        D[j] = dj;
        l(j, j) = 1.0;
        for (int i = j + 1; i < K; ++i) {
            double v = R.prefactor * R.at(i + 1, j + 1);
            for (int k = 0; k < j; ++k) v -= l(i, k) * l(j, k) * D[k];
            l(i, j) = v / dj;
        }
    }

    // T = L^{-T} S with S_nn = sqrt(n / D_nn): solve L^T T = S column-wise.
    DiagonalTransform T{K, std::vector<double>(static_cast<size_t>(K) * K, 0.0)};
    auto t = [&](int i, int j) -> double& { return T.entries[static_cast<size_t>(i) * K + j]; };
    for (int col = 0; col < K; ++col) {
        t(col, col) = std::sqrt((col + 1) / D[col]);
        for (int i = col - 1; i >= 0; --i) {
            double v = 0.0;
            for (int k = i + 1; k <= col; ++k) v -= l(k, i) * t(k, col);
            t(i, col) = v;
        }
    }
    return T;
}

DiagonalTransform weight_transform(const WeightSpec& weight, int K) {
    switch (weight.kind) {
        case WeightKind::Arcsine: {
            // V = (1/4) sum n c_n^2 = sum n (c_n/2)^2, i.e. c = 2d
            DiagonalTransform T{K, std::vector<double>(static_cast<size_t>(K) * K, 0.0)};
            for (int i = 0; i < K; ++i) T.entries[static_cast<size_t>(i) * K + i] = 2.0;
            return T;
        }
        case WeightKind::Semicircle: return transform_w2(K);
        case WeightKind::HardEdge: return transform_w3(K, weight.a, weight.b);
        case WeightKind::Jacobi: return diagonalize_general(build_kernel(weight, K));
    }
    throw std::invalid_argument("bad weight kind");
}

}  // namespace linstat
