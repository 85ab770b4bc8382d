#include "linstat/chebyshev.hpp"

#include <cstdlib>
#include <stdexcept>

namespace linstat {

double eval_cheb(ChebKind kind, int n, double tau) {
    if (kind == ChebKind::First) {
        n = std::abs(n);  // T_{-n} = T_n
        if (n == 0) return 1.0;
        double prev = 1.0, cur = tau;
        for (int k = 2; k <= n; ++k) {
            double next = 2.0 * tau * cur - prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    // U_{-1} = 0, U_{-n-2} = -U_n
    if (n == -1) return 0.0;
    if (n < -1) return -eval_cheb(ChebKind::Second, -n - 2, tau);
    if (n == 0) return 1.0;
    double prev = 1.0, cur = 2.0 * tau;
    for (int k = 2; k <= n; ++k) {
        double next = 2.0 * tau * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double eval_translated(ChebKind kind, int n, double x, const AffineMap& map) {
    return eval_cheb(kind, n, map.to_unit(x));
}

std::vector<Poly> cheb_basis_polys(ChebKind kind, const AffineMap& map, int count) {
    if (count <= 0) throw std::invalid_argument("cheb_basis_polys: count must be positive");
    // tau(x) = beta*x + alpha
    const double beta = 2.0 / (map.b - map.a);
    const double alpha = -(map.b + map.a) / (map.b - map.a);

    std::vector<std::vector<double>> cols;
    cols.reserve(count);
    cols.push_back({1.0});
    if (count > 1) {
        if (kind == ChebKind::First)
            cols.push_back({alpha, beta});
        else
            cols.push_back({2.0 * alpha, 2.0 * beta});
    }
    for (int n = 2; n < count; ++n) {
        const auto& p1 = cols[n - 1];
        const auto& p2 = cols[n - 2];
        std::vector<double> next(n + 1, 0.0);
        for (size_t j = 0; j < p1.size(); ++j) {
            next[j] += 2.0 * alpha * p1[j];
            next[j + 1] += 2.0 * beta * p1[j];
        }
        for (size_t j = 0; j < p2.size(); ++j) next[j] -= p2[j];
        cols.push_back(std::move(next));
    }

    std::vector<Poly> out;
    out.reserve(count);
    for (auto& c : cols) out.emplace_back(std::move(c));
    return out;
}

double BasisExpansion::coeff(int n) const {
    if (n < 0 || n >= static_cast<int>(coeffs.size())) return 0.0;
    return coeffs[n];
}

namespace {

// Back-substitution against a triangular family: column n has exact
// degree n, so c_K..c_0 peel off top-down. Exact in the sense that no
// quadrature enters.
std::vector<double> triangular_expand(const Poly& f, const std::vector<Poly>& cols) {
    const int K = f.degree();
    std::vector<double> residual(f.coeffs().begin(), f.coeffs().begin() + K + 1);
    std::vector<double> c(K + 1, 0.0);
    for (int n = K; n >= 0; --n) {
        c[n] = residual[n] / cols[n].coeff(n);
        for (int j = 0; j <= n; ++j) residual[j] -= c[n] * cols[n].coeff(j);
    }
    return c;
}

}  // namespace

BasisExpansion monomial_to_cheb(const Poly& f, ChebKind kind, const AffineMap& map) {
    const auto cols = cheb_basis_polys(kind, map, f.degree() + 1);
    return BasisExpansion{kind == ChebKind::First ? Basis::ChebT : Basis::ChebU, map,
                          triangular_expand(f, cols)};
}

BasisExpansion derivative_in_u(const BasisExpansion& t_expansion) {
    if (t_expansion.basis != Basis::ChebT) {
        throw std::invalid_argument("derivative_in_u expects a ChebT expansion");
    }
    const int K = t_expansion.max_index();
    const double scale = 2.0 / (t_expansion.interval.b - t_expansion.interval.a);
    std::vector<double> u(std::max(K, 1), 0.0);
    for (int n = 1; n <= K; ++n) u[n - 1] = scale * n * t_expansion.coeffs[n];
    return BasisExpansion{Basis::ChebU, t_expansion.interval, std::move(u)};
}

}  // namespace linstat
