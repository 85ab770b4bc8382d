#include <doctest.h>

#include <cmath>
#include <random>

#include "linstat/chebyshev.hpp"
#include "linstat/expansion.hpp"
#include "reference.hpp"
#include "test_util.hpp"

using namespace linstat;
using namespace linstat::testing;

TEST_CASE("eval_cheb basic values") {
    CHECK(eval_cheb(ChebKind::First, 0, 0.7) == 1.0);
    CHECK(eval_cheb(ChebKind::First, 2, 0.5) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(eval_cheb(ChebKind::Second, 2, 0.5) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(eval_cheb(ChebKind::First, 1, 0.3) == 0.3);
    CHECK(eval_cheb(ChebKind::Second, 1, 0.3) == 0.6);
}

TEST_CASE("extended negative indices") {
    for (double tau : {-0.8, 0.1, 0.9, 2.5}) {
        CHECK(eval_cheb(ChebKind::Second, -1, tau) == 0.0);
        CHECK(eval_cheb(ChebKind::Second, -2, tau) == -1.0);
        // U_{-3} = -U_1
        CHECK(eval_cheb(ChebKind::Second, -3, tau) == -2.0 * tau);
        CHECK(eval_cheb(ChebKind::First, -3, tau) == eval_cheb(ChebKind::First, 3, tau));
        // recurrence still holds across the negative range
        for (int n = -2; n <= 2; ++n) {
            const double lhs = eval_cheb(ChebKind::Second, n, tau);
            const double rhs = 2.0 * tau * eval_cheb(ChebKind::Second, n - 1, tau) -
                               eval_cheb(ChebKind::Second, n - 2, tau);
            CHECK(close_abs(lhs, rhs, 1e-12));
        }
    }
}

TEST_CASE("recurrence matches trigonometric identities") {
    for (int n = 0; n <= 12; ++n) {
        for (int k = 1; k <= 50; ++k) {
            const double theta = kPi * k / 51.0;
            const double tau = std::cos(theta);
            CHECK(close_abs(eval_cheb(ChebKind::First, n, tau), std::cos(n * theta), 1e-12));
            CHECK(close_abs(eval_cheb(ChebKind::Second, n, tau),
                            std::sin((n + 1) * theta) / std::sin(theta), 1e-10));
        }
    }
}

TEST_CASE("eval_translated") {
    CHECK(eval_translated(ChebKind::First, 1, 0.0, AffineMap(0.0, 1.0)) == -1.0);
    CHECK(eval_translated(ChebKind::Second, 1, 0.35, AffineMap(-0.3, 1.0)) == 0.0);
    CHECK(eval_translated(ChebKind::First, 3, 1.5, AffineMap(1.0, 2.0)) == 0.0);
    CHECK_THROWS_AS(AffineMap(2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(AffineMap(1.0, 1.0), std::invalid_argument);
}

TEST_CASE("discrete orthogonality of translated bases") {
    const AffineMap map(0.5, 3.0);
    const int K = 8;
    const int M = 2 * K + 2;

    const auto rule_t = QuadratureRule::gauss_chebyshev_t(M);
    for (int m = 0; m <= K; ++m) {
        for (int n = 0; n <= K; ++n) {
            const double val = rule_t.integrate([&](double tau) {
                const double x = map.from_unit(tau);
                return eval_translated(ChebKind::First, m, x, map) *
                       eval_translated(ChebKind::First, n, x, map);
            });
            const double expect = m != n ? 0.0 : (m == 0 ? kPi : kPi / 2.0);
            CHECK(close_abs(val, expect, 1e-12));
        }
    }

    const auto rule_u = QuadratureRule::gauss_chebyshev_u(M);
    const double half = map.half_width();
    for (int m = 0; m <= K; ++m) {
        for (int n = 0; n <= K; ++n) {
            const double val = half * half * rule_u.integrate([&](double tau) {
                const double x = map.from_unit(tau);
                return eval_translated(ChebKind::Second, m, x, map) *
                       eval_translated(ChebKind::Second, n, x, map);
            });
            const double expect = m == n ? kPi * (map.b - map.a) * (map.b - map.a) / 8.0 : 0.0;
            CHECK(close_abs(val, expect, 1e-12));
        }
    }
}

TEST_CASE("monomial_to_cheb known expansions") {
    const AffineMap unit(-1.0, 1.0);

    const auto cx = monomial_to_cheb(Poly({0.0, 1.0}), ChebKind::First, unit);
    REQUIRE(cx.coeffs.size() == 2);
    CHECK(cx.coeffs[0] == 0.0);
    CHECK(cx.coeffs[1] == 1.0);

    // x^2 = (T_0 + T_2)/2; cross-checked against the quadrature projection
    const Poly x2({0.0, 0.0, 1.0});
    const auto cx2 = monomial_to_cheb(x2, ChebKind::First, unit);
    REQUIRE(cx2.coeffs.size() == 3);
    CHECK(close_abs(cx2.coeffs[0], 0.5, 1e-15));
    CHECK(close_abs(cx2.coeffs[1], 0.0, 1e-15));
    CHECK(close_abs(cx2.coeffs[2], 0.5, 1e-15));
    for (int n = 0; n <= 2; ++n) {
        CHECK(close_abs(cx2.coeffs[n], project_cheb(x2, ChebKind::First, unit, n, 8), 1e-13));
    }

    // x on [0,1]: x = 1/2 + (1/2)(2x-1)
    const AffineMap zero_one(0.0, 1.0);
    const auto cx01 = monomial_to_cheb(Poly({0.0, 1.0}), ChebKind::First, zero_one);
    CHECK(close_abs(cx01.coeffs[0], 0.5, 1e-15));
    CHECK(close_abs(cx01.coeffs[1], 0.5, 1e-15));
    for (double x : {0.1, 0.5, 0.9}) {
        CHECK(close_abs(eval_expansion(cx01, x), x, 1e-15));
    }
}

TEST_CASE("round trip monomial <-> chebyshev") {
    std::mt19937 rng(20240811);
    const AffineMap benign[] = {AffineMap(-1.0, 1.0), AffineMap(0.0, 1.0), AffineMap(-2.0, 2.0)};
    for (int rep = 0; rep < 72; ++rep) {
        const int deg = 1 + rep % 12;
        const Poly f = random_poly(rng, deg);
        const AffineMap& map = benign[rep % 3];
        const ChebKind kind = rep % 2 ? ChebKind::First : ChebKind::Second;
        const auto e = monomial_to_cheb(f, kind, map);
        const Poly back = expansion_to_monomial(e);
        REQUIRE(back.degree() == f.degree());
        for (int j = 0; j <= deg; ++j) CHECK(close_abs(back.coeff(j), f.coeff(j), 1e-12));
        // reconstruction by evaluation as well
        for (double x : {map.a, map.midpoint(), map.b}) {
            CHECK(close_rel(eval_expansion(e, x), f.eval(x), 1e-12));
        }
    }

    // off-center intervals condition the monomial basis badly, so the
    // faithful statement there is a backward one: error small relative to
    // the magnitude of the products actually summed
    const AffineMap wide[] = {AffineMap(1.0, 4.0), AffineMap(0.3, 2.7)};
    for (int rep = 0; rep < 24; ++rep) {
        const int deg = 1 + rep % 12;
        const Poly f = random_poly(rng, deg);
        const AffineMap& map = wide[rep % 2];
        const ChebKind kind = rep % 2 ? ChebKind::First : ChebKind::Second;
        const auto e = monomial_to_cheb(f, kind, map);
        const Poly back = expansion_to_monomial(e);
        double scale = 1.0;
        const auto cols = cheb_basis_polys(kind, map, deg + 1);
        for (int n = 0; n <= deg; ++n) {
            for (int j = 0; j <= n; ++j) {
                scale = std::max(scale, std::abs(e.coeffs[n] * cols[n].coeff(j)));
            }
        }
        for (int j = 0; j <= deg; ++j) {
            CHECK(close_abs(back.coeff(j), f.coeff(j), 2e-14 * scale));
        }
    }
}

TEST_CASE("derivative_in_u") {
    const AffineMap unit(-1.0, 1.0);

    const auto dc = derivative_in_u(monomial_to_cheb(Poly({5.0}), ChebKind::First, unit));
    CHECK(dc.basis == Basis::ChebU);
    REQUIRE(dc.coeffs.size() == 1);
    CHECK(dc.coeffs[0] == 0.0);

    const auto d1 = derivative_in_u(BasisExpansion{Basis::ChebT, unit, {0.0, 1.0}});
    REQUIRE(d1.coeffs.size() == 1);
    CHECK(d1.coeffs[0] == 1.0);

    const AffineMap zero_one(0.0, 1.0);
    const auto d2 = derivative_in_u(BasisExpansion{Basis::ChebT, zero_one, {0.0, 0.0, 1.0}});
    REQUIRE(d2.coeffs.size() == 2);
    CHECK(close_abs(d2.coeffs[0], 0.0, 1e-15));
    CHECK(close_abs(d2.coeffs[1], 4.0, 1e-15));

    CHECK_THROWS_AS(derivative_in_u(BasisExpansion{Basis::ChebU, unit, {0.0, 1.0}}),
                    std::invalid_argument);

    // against central finite differences of f at interior points
    std::mt19937 rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        const Poly f = random_poly(rng, 2 + rep % 7);
        const AffineMap map(0.2, 2.6);
        const auto fp = derivative_in_u(monomial_to_cheb(f, ChebKind::First, map));
        for (int k = 1; k <= 10; ++k) {
            const double x = map.a + (map.b - map.a) * k / 11.0;
            const double fd = central_diff([&](double t) { return f.eval(t); }, x);
            CHECK(close_abs(eval_expansion(fp, x), fd, 1e-6));
        }
    }
}

TEST_CASE("zero polynomial is accepted") {
    const Poly zero;
    CHECK(zero.degree() == 0);
    CHECK(zero.is_zero());
    const auto e = monomial_to_cheb(zero, ChebKind::First, AffineMap(0.0, 1.0));
    CHECK(e.coeffs == std::vector<double>{0.0});
}
