#include "linstat/weight.hpp"

#include <cmath>
#include <stdexcept>

namespace linstat {

std::string_view weight_name(WeightKind kind) {
    switch (kind) {
        case WeightKind::Arcsine: return "arcsine";
        case WeightKind::Semicircle: return "semicircle";
        case WeightKind::HardEdge: return "hard-edge";
        case WeightKind::Jacobi: return "jacobi";
    }
    throw std::invalid_argument("weight_name: bad kind");
}

WeightKind weight_kind_from_name(std::string_view name) {
    if (name == "arcsine") return WeightKind::Arcsine;
    if (name == "semicircle") return WeightKind::Semicircle;
    if (name == "hard-edge") return WeightKind::HardEdge;
    if (name == "jacobi") return WeightKind::Jacobi;
    throw std::invalid_argument("unknown weight \"" + std::string(name) +
                                "\" (expected arcsine, semicircle, hard-edge or jacobi)");
}

namespace {

// eta(tau) = (a-b)/2 tau^2 + (1-a-b) tau + (a+b)(a+b-2)/(2(a-b)); equals
// x(1-x) * 2/(b-a) under the affine substitution, so it must be positive
// whenever 0 < a < b < 1. Checked on a fixed grid anyway.
double eta(double tau, double a, double b) {
    return 0.5 * (a - b) * tau * tau + (1.0 - a - b) * tau +
           (a + b) * (a + b - 2.0) / (2.0 * (a - b));
}

}  // namespace

WeightSpec::WeightSpec(WeightKind kind_, double a_, double b_) : kind(kind_), a(a_), b(b_) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("weight interval must be finite");
    }
    switch (kind) {
        case WeightKind::Arcsine:
        case WeightKind::Semicircle:
            if (!(a < b)) {
                throw std::invalid_argument(std::string(name()) + " requires a < b");
            }
            break;
        case WeightKind::HardEdge: {
            if (!(0.0 < a && a < b)) {
                throw std::invalid_argument("hard-edge requires 0 < a < b");
            }
            // rho(tau) = tau + (b+a)/(b-a) > 0 on [-1,1]; minimum at tau = -1.
            if (!(-1.0 + (b + a) / (b - a) > 0.0)) {
                throw std::invalid_argument("hard-edge requires rho > 0 on [-1,1]");
            }
            break;
        }
        case WeightKind::Jacobi: {
            if (!(0.0 < a && a < b && b < 1.0)) {
                throw std::invalid_argument("jacobi requires 0 < a < b < 1");
            }
            for (int k = 0; k <= 1000; ++k) {
                double tau = -1.0 + 2.0 * k / 1000.0;
                if (!(eta(tau, a, b) > 0.0)) {
                    throw std::invalid_argument("jacobi requires eta > 0 on [-1,1]");
                }
            }
            break;
        }
    }
}

WeightSpec WeightSpec::from_name(std::string_view name, double a, double b) {
    return WeightSpec(weight_kind_from_name(name), a, b);
}

}  // namespace linstat
