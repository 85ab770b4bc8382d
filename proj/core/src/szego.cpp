#include "linstat/szego.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "linstat/errors.hpp"

namespace linstat {

namespace {

void require_hard_edge_interval(double a, double b) {
    if (!(0.0 < a && a < b)) throw std::invalid_argument("hard-edge requires 0 < a < b");
}

void require_jacobi_interval(double a, double b) {
    if (!(0.0 < a && a < b && b < 1.0)) {
        throw std::invalid_argument("jacobi requires 0 < a < b < 1");
    }
}

// h must not vanish inside the unit disk for the factorization to be the
// Szego one. Sampled on a polar grid of |z| <= 0.999.
template <typename H>
void check_h_nonzero_in_disk(H&& h) {
    for (int ir = 0; ir <= 24; ++ir) {
        const double r = 0.999 * ir / 24.0;
        for (int it = 0; it < 64; ++it) {
            const double th = 2.0 * std::numbers::pi * it / 64.0;
            if (std::abs(h(std::polar(r, th))) < 1e-12) {
                throw NumericalError("Szego factor h(z) vanishes in |z| < 1");
            }
        }
    }
}

struct HattedW4Coeffs {
    double A, B, C;  // Phat_n = A Uhat_{n-2} + B Uhat_{n-1} + C Uhat_n
};

// The Szego constants times 2 sqrt(2(b-a)); computed directly so the hot
// paths skip the constructor's disk check.
HattedW4Coeffs hatted_w4(double a, double b) {
    const double sa = std::sqrt(a), sb = std::sqrt(b);
    const double ra = std::sqrt(1.0 - a), rb = std::sqrt(1.0 - b);
    return {(sb - sa) * (rb - ra),
            2.0 * (std::sqrt(b * (1.0 - b)) - std::sqrt(a * (1.0 - a))),
            (sb + sa) * (rb + ra)};
}

}  // namespace

SzegoConstantsW3 w3_constants(double a, double b) {
    require_hard_edge_interval(a, b);
    const double denom = std::sqrt(2.0 * (b - a));
    SzegoConstantsW3 k{(std::sqrt(b) - std::sqrt(a)) / denom,
                       (std::sqrt(b) + std::sqrt(a)) / denom};
    check_h_nonzero_in_disk([&](std::complex<double> z) { return k.A * z + k.B; });
    return k;
}

SzegoConstantsW4 w4_constants(double a, double b) {
    require_jacobi_interval(a, b);
    const double sa = std::sqrt(a), sb = std::sqrt(b);
    const double ra = std::sqrt(1.0 - a), rb = std::sqrt(1.0 - b);
    const double denom = std::sqrt(2.0 * (b - a));
    SzegoConstantsW4 k{(sb - sa) * (rb - ra) / (2.0 * denom),
                       (std::sqrt(b * (1.0 - b)) - std::sqrt(a * (1.0 - a))) / denom,
                       (sb + sa) * (rb + ra) / (2.0 * denom)};
    check_h_nonzero_in_disk([&](std::complex<double> z) { return (k.A * z + k.B) * z + k.C; });
    return k;
}

double eval_phat(const WeightSpec& weight, int n, double x) {
    if (n < 0) throw std::invalid_argument("eval_phat: n must be nonnegative");
    const AffineMap map = weight.interval();
    const double a = weight.a, b = weight.b;
    switch (weight.kind) {
        case WeightKind::HardEdge: {
            const double sa = std::sqrt(a), sb = std::sqrt(b);
            return 2.0 * (x + std::sqrt(a * b)) / (sb + sa) *
                       eval_translated(ChebKind::Second, n, x, map) -
                   (sb - sa) * eval_translated(ChebKind::First, n + 1, x, map);
        }
        case WeightKind::Jacobi: {
            const HattedW4Coeffs h = hatted_w4(a, b);
            return h.A * eval_translated(ChebKind::Second, n - 2, x, map) +
                   h.B * eval_translated(ChebKind::Second, n - 1, x, map) +
                   h.C * eval_translated(ChebKind::Second, n, x, map);
        }
        default:
            throw std::invalid_argument("eval_phat: weight must be hard-edge or jacobi");
    }
}

double eval_phat_deriv(const WeightSpec& weight, int n, double x) {
    if (n < 1) throw std::invalid_argument("eval_phat_deriv: n must be positive");
    if (!(weight.a < x && x < weight.b)) {
        throw std::domain_error("eval_phat_deriv: x must lie strictly inside (a,b)");
    }
    const AffineMap map = weight.interval();
    const double tau = map.to_unit(x);
    const double one_minus = 1.0 - tau * tau;
    const double chain = 2.0 / (weight.b - weight.a);
    const auto u = [&](int k) { return eval_cheb(ChebKind::Second, k, tau); };

    switch (weight.kind) {
        case WeightKind::HardEdge: {
            const double sa = std::sqrt(weight.a), sb = std::sqrt(weight.b);
            const double num = (n + 1) * ((sb - sa) * tau + sb + sa) * u(n - 1) -
                               n * ((sb + sa) * tau + sb - sa) * u(n);
            return chain * num / one_minus;
        }
        case WeightKind::Jacobi: {
            const HattedW4Coeffs h = hatted_w4(weight.a, weight.b);
            const double num =
                h.A * ((n - 1) * u(n - 3) - (n - 2) * tau * u(n - 2)) +
                h.B * (n * u(n - 2) - (n - 1) * tau * u(n - 1)) +
                h.C * ((n + 1) * u(n - 1) - n * tau * u(n));
            return chain * num / one_minus;
        }
        default:
            throw std::invalid_argument("eval_phat_deriv: weight must be hard-edge or jacobi");
    }
}

std::vector<Poly> phat_polys(const WeightSpec& weight, int count) {
    if (count <= 0) throw std::invalid_argument("phat_polys: count must be positive");
    const AffineMap map = weight.interval();
    const double a = weight.a, b = weight.b;

    std::vector<Poly> out;
    out.reserve(count);

    if (weight.kind == WeightKind::HardEdge) {
        const double sa = std::sqrt(a), sb = std::sqrt(b);
        const auto us = cheb_basis_polys(ChebKind::Second, map, count);
        const auto ts = cheb_basis_polys(ChebKind::First, map, count + 1);
        // 2(x + sqrt(ab))/(sqrt b + sqrt a) as a linear factor
        const double lin0 = 2.0 * std::sqrt(a * b) / (sb + sa);
        const double lin1 = 2.0 / (sb + sa);
        for (int n = 0; n < count; ++n) {
            std::vector<double> c(n + 2, 0.0);
            for (int j = 0; j <= n; ++j) {
                const double uj = us[n].coeff(j);
                c[j] += lin0 * uj;
                c[j + 1] += lin1 * uj;
            }
            for (int j = 0; j <= n + 1; ++j) c[j] -= (sb - sa) * ts[n + 1].coeff(j);
            // the x^{n+1} terms cancel identically; drop the roundoff residue
            if (std::abs(c[n + 1]) > 1e-8 * std::abs(c[n])) {
                throw NumericalError("phat_polys: hard-edge degree cancellation failed");
            }
            c.pop_back();
            out.emplace_back(std::move(c));
        }
        return out;
    }

    if (weight.kind == WeightKind::Jacobi) {
        const HattedW4Coeffs h = hatted_w4(a, b);
        const auto us = cheb_basis_polys(ChebKind::Second, map, count);
        for (int n = 0; n < count; ++n) {
            std::vector<double> c(n + 1, 0.0);
            for (int j = 0; j <= n; ++j) c[j] += h.C * us[n].coeff(j);
            if (n >= 1)
                for (int j = 0; j <= n - 1; ++j) c[j] += h.B * us[n - 1].coeff(j);
            if (n >= 2)
                for (int j = 0; j <= n - 2; ++j) c[j] += h.A * us[n - 2].coeff(j);
            if (n == 0) c[0] -= h.A;  // Uhat_{-2} = -1
            out.emplace_back(std::move(c));
        }
        return out;
    }

    throw std::invalid_argument("phat_polys: weight must be hard-edge or jacobi");
}

BasisExpansion expand_in_phat(const Poly& f, const WeightSpec& weight) {
    const int K = f.degree();
    const auto cols = phat_polys(weight, K + 1);
    std::vector<double> residual(f.coeffs().begin(), f.coeffs().begin() + K + 1);
    std::vector<double> c(K + 1, 0.0);
    for (int n = K; n >= 0; --n) {
        c[n] = residual[n] / cols[n].coeff(n);
        for (int j = 0; j <= n; ++j) residual[j] -= c[n] * cols[n].coeff(j);
    }
    const Basis basis =
        weight.kind == WeightKind::HardEdge ? Basis::SzegoHardEdge : Basis::SzegoJacobi;
    return BasisExpansion{basis, weight.interval(), std::move(c)};
}

}  // namespace linstat
