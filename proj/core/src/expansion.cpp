#include "linstat/expansion.hpp"

#include <stdexcept>

#include "linstat/szego.hpp"

namespace linstat {

namespace {

WeightSpec weight_of(const BasisExpansion& e) {
    switch (e.basis) {
        case Basis::ChebT: return WeightSpec::arcsine(e.interval.a, e.interval.b);
        case Basis::ChebU: return WeightSpec::semicircle(e.interval.a, e.interval.b);
        case Basis::SzegoHardEdge: return WeightSpec::hard_edge(e.interval.a, e.interval.b);
        case Basis::SzegoJacobi: return WeightSpec::jacobi(e.interval.a, e.interval.b);
    }
    throw std::invalid_argument("bad basis");
}

}  // namespace

Basis basis_for(WeightKind kind) {
    switch (kind) {
        case WeightKind::Arcsine: return Basis::ChebT;
        case WeightKind::Semicircle: return Basis::ChebU;
        case WeightKind::HardEdge: return Basis::SzegoHardEdge;
        case WeightKind::Jacobi: return Basis::SzegoJacobi;
    }
    throw std::invalid_argument("bad weight kind");
}

std::vector<Poly> basis_polys(const WeightSpec& weight, int count) {
    switch (weight.kind) {
        case WeightKind::Arcsine:
            return cheb_basis_polys(ChebKind::First, weight.interval(), count);
        case WeightKind::Semicircle:
            return cheb_basis_polys(ChebKind::Second, weight.interval(), count);
        default:
            return phat_polys(weight, count);
    }
}

BasisExpansion expand_in_weight_basis(const Poly& f, const WeightSpec& weight) {
    switch (weight.kind) {
        case WeightKind::Arcsine:
            return monomial_to_cheb(f, ChebKind::First, weight.interval());
        case WeightKind::Semicircle:
            return monomial_to_cheb(f, ChebKind::Second, weight.interval());
        default:
            return expand_in_phat(f, weight);
    }
}

double eval_expansion(const BasisExpansion& e, double x) {
    double acc = 0.0;
    switch (e.basis) {
        case Basis::ChebT:
        case Basis::ChebU: {
            const double tau = e.interval.to_unit(x);
            // single forward recurrence pass shared by all terms
            double prev = 1.0;
            double cur = e.basis == Basis::ChebT ? tau : 2.0 * tau;
            acc = e.coeffs[0] * prev;
            if (e.max_index() >= 1) acc += e.coeffs[1] * cur;
            for (int n = 2; n <= e.max_index(); ++n) {
                const double next = 2.0 * tau * cur - prev;
                prev = cur;
                cur = next;
                acc += e.coeffs[n] * cur;
            }
            return acc;
        }
        case Basis::SzegoHardEdge:
        case Basis::SzegoJacobi: {
            const WeightSpec w = weight_of(e);
            for (int n = 0; n <= e.max_index(); ++n) acc += e.coeffs[n] * eval_phat(w, n, x);
            return acc;
        }
    }
    throw std::invalid_argument("bad basis");
}

Poly expansion_to_monomial(const BasisExpansion& e) {
    const auto cols = basis_polys(weight_of(e), e.max_index() + 1);
    std::vector<double> c(e.max_index() + 1, 0.0);
    for (int n = 0; n <= e.max_index(); ++n) {
        for (int j = 0; j <= cols[n].degree(); ++j) c[j] += e.coeffs[n] * cols[n].coeff(j);
    }
    return Poly(std::move(c));
}

}  // namespace linstat
