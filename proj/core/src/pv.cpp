#include "linstat/pv.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "linstat/chebyshev.hpp"
#include "linstat/quadrature.hpp"

namespace linstat {

namespace {

constexpr double kPi = std::numbers::pi;

void require_interior_tau(double tau) {
    if (!(-1.0 < tau && tau < 1.0)) {
        throw std::invalid_argument("tau must lie strictly inside (-1,1)");
    }
}

// Monomial coefficients of U_n (extended to negative indices).
std::vector<double> u_monomials(int n) {
    if (n == -1) return {0.0};
    if (n < -1) {
        auto c = u_monomials(-n - 2);
        for (double& v : c) v = -v;
        return c;
    }
    std::vector<std::vector<double>> cols{{1.0}, {0.0, 2.0}};
    for (int k = 2; k <= n; ++k) {
        std::vector<double> next(k + 1, 0.0);
        for (size_t j = 0; j < cols[k - 1].size(); ++j) next[j + 1] += 2.0 * cols[k - 1][j];
        for (size_t j = 0; j < cols[k - 2].size(); ++j) next[j] -= cols[k - 2][j];
        cols.push_back(std::move(next));
    }
    return cols[n];
}

// PV int p(t)/(sqrt(1-t^2)(tau-t)) dt by subtraction; the subtracted pole
// integrates to zero because PV int 1/(sqrt(1-t^2)(tau-t)) dt = 0.
double pv_against_t_weight(const std::vector<double>& p, double tau) {
    const Poly poly{std::vector<double>(p)};
    const double ptau = poly.eval(tau);
    const auto rule = QuadratureRule::gauss_chebyshev_t(static_cast<int>(p.size()) + 8);
    return rule.integrate(
        [&](double t) { return (poly.eval(t) - ptau) / (tau - t); });
}

}  // namespace

double pv_cauchy_u(int n, double tau) {
    if (n < 1) throw std::invalid_argument("pv_cauchy_u: n must be positive");
    require_interior_tau(tau);
    return kPi * eval_cheb(ChebKind::First, n, tau);
}

double pv_cauchy_u_numeric(int n, double tau) {
    if (n < 1) throw std::invalid_argument("pv_cauchy_u_numeric: n must be positive");
    require_interior_tau(tau);
    const double u_tau = eval_cheb(ChebKind::Second, n - 1, tau);
    const auto rule = QuadratureRule::gauss_chebyshev_u(n + 8);
    const double regular = rule.integrate([&](double t) {
        return (eval_cheb(ChebKind::Second, n - 1, t) - u_tau) / (tau - t);
    });
    // subtracted pole: PV int sqrt(1-t^2)/(tau-t) dt = pi tau
    return regular + u_tau * kPi * tau;
}

double pv_prin(int n, double tau) {
    if (n < 1) throw std::invalid_argument("pv_prin: n must be positive");
    require_interior_tau(tau);
    return kPi * eval_cheb(ChebKind::First, n, tau) / (1.0 - tau * tau) -
           kPi / (2.0 * (1.0 - tau)) - (n % 2 == 0 ? 1.0 : -1.0) * kPi / (2.0 * (1.0 + tau));
}

double pv_prin_numeric(int n, double tau) {
    if (n < 1) throw std::invalid_argument("pv_prin_numeric: n must be positive");
    require_interior_tau(tau);
    return pv_against_t_weight(u_monomials(n - 1), tau);
}

double pv_next(int n, double tau) {
    if (n < 0) throw std::invalid_argument("pv_next: n must be nonnegative");
    require_interior_tau(tau);
    return kPi * tau * eval_cheb(ChebKind::First, n + 1, tau) / (1.0 - tau * tau) -
           kPi / (2.0 * (1.0 - tau)) - (n % 2 == 0 ? 1.0 : -1.0) * kPi / (2.0 * (1.0 + tau));
}

double pv_next_numeric(int n, double tau) {
    if (n < 0) throw std::invalid_argument("pv_next_numeric: n must be nonnegative");
    require_interior_tau(tau);
    auto p = u_monomials(n);
    p.insert(p.begin(), 0.0);  // t * U_n
    return pv_against_t_weight(p, tau);
}

double u_moment(UMomentKind which, int n) {
    switch (which) {
        case UMomentKind::OnePlusT:
            if (n < 1) throw std::invalid_argument("u_moment OnePlusT: n must be positive");
            return kPi;
        case UMomentKind::OneMinusT:
            if (n < 1) throw std::invalid_argument("u_moment OneMinusT: n must be positive");
            return (n % 2 == 0 ? -1.0 : 1.0) * kPi;
        case UMomentKind::Plain:
            if (n < 0) throw std::invalid_argument("u_moment Plain: n must be nonnegative");
            return n % 2 == 0 ? kPi : 0.0;
    }
    throw std::invalid_argument("u_moment: bad kind");
}

double u_moment_numeric(UMomentKind which, int n) {
    if ((which == UMomentKind::Plain && n < 0) || (which != UMomentKind::Plain && n < 1)) {
        throw std::invalid_argument("u_moment_numeric: invalid n");
    }
    const auto rule = QuadratureRule::gauss_chebyshev_t(n + 4);
    switch (which) {
        case UMomentKind::OnePlusT:
            return rule.integrate(
                [&](double t) { return (1.0 + t) * eval_cheb(ChebKind::Second, n - 1, t); });
        case UMomentKind::OneMinusT:
            return rule.integrate(
                [&](double t) { return (1.0 - t) * eval_cheb(ChebKind::Second, n - 1, t); });
        case UMomentKind::Plain:
            return rule.integrate([&](double t) { return eval_cheb(ChebKind::Second, n, t); });
    }
    throw std::invalid_argument("u_moment_numeric: bad kind");
}

double inner_pv(const Poly& fprime, double x, const AffineMap& interval, int num_nodes) {
    if (!(interval.a < x && x < interval.b)) {
        throw std::invalid_argument("inner_pv: x must lie strictly inside (a,b)");
    }
    const double fpx = fprime.eval(x);

    // synthetic division: fprime(y) - fprime(x) = (y - x) h(y), so the
    // regularized integrand is the polynomial -h(y)
    const int deg = fprime.degree();
    std::vector<double> h(std::max(deg, 1), 0.0);
    double acc = 0.0;
    for (int j = deg; j >= 1; --j) {
        acc = fprime.coeff(j) + acc * x;
        h[j - 1] = acc;
    }
    const Poly hp{std::move(h)};

    if (num_nodes < 0) num_nodes = deg + 8;
    const auto rule = QuadratureRule::gauss_chebyshev_u(num_nodes);
    const double half = interval.half_width();
    const double regular =
        half * half * rule.integrate([&](double t) { return -hp.eval(interval.from_unit(t)); });

    return regular + fpx * kPi * (x - interval.midpoint());
}

double variance_oracle(const Poly& f, const AffineMap& interval, int outer_nodes) {
    const int K = f.degree();
    if (K == 0) return 0.0;
    const Poly fp = f.derivative();
    if (outer_nodes < 0) outer_nodes = 4 * K + 16;
    const auto rule = QuadratureRule::gauss_chebyshev_t(outer_nodes);
    const double sum = rule.integrate([&](double tau) {
        const double x = interval.from_unit(tau);
        return f.eval(x) * inner_pv(fp, x, interval);
    });
    return sum / (2.0 * kPi * kPi);
}

double variance_oracle(const Poly& f, const WeightSpec& weight, int outer_nodes) {
    // Only the interval enters; the weight kind merely selects the basis
    // used by the closed-form side.
    return variance_oracle(f, weight.interval(), outer_nodes);
}

}  // namespace linstat
