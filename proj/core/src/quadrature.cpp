#include "linstat/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace linstat {

QuadratureRule QuadratureRule::gauss_chebyshev_t(int num_nodes) {
    if (num_nodes < 1) throw std::invalid_argument("gauss_chebyshev_t: need at least one node");
    QuadratureRule rule{QuadKind::GaussChebyshevT, {}, {}};
    rule.nodes.reserve(num_nodes);
    rule.weights.assign(num_nodes, std::numbers::pi / num_nodes);
    for (int k = 1; k <= num_nodes; ++k) {
        rule.nodes.push_back(std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * num_nodes)));
    }
    return rule;
}

QuadratureRule QuadratureRule::gauss_chebyshev_u(int num_nodes) {
    if (num_nodes < 1) throw std::invalid_argument("gauss_chebyshev_u: need at least one node");
    QuadratureRule rule{QuadKind::GaussChebyshevU, {}, {}};
    rule.nodes.reserve(num_nodes);
    rule.weights.reserve(num_nodes);
    for (int k = 1; k <= num_nodes; ++k) {
        const double theta = k * std::numbers::pi / (num_nodes + 1);
        rule.nodes.push_back(std::cos(theta));
        const double s = std::sin(theta);
        rule.weights.push_back(std::numbers::pi / (num_nodes + 1) * s * s);
    }
    return rule;
}

}  // namespace linstat
