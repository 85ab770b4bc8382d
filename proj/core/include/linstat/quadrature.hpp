#ifndef LINSTAT_QUADRATURE_HPP
#define LINSTAT_QUADRATURE_HPP

#include <vector>

namespace linstat {

enum class QuadKind { GaussChebyshevT, GaussChebyshevU };

/// Gauss-Chebyshev rules on (-1,1). With M nodes both kinds integrate
/// polynomials of degree <= 2M-1 exactly against their weight:
///   first kind:  int p(t)/sqrt(1-t^2) dt,  nodes cos((2k-1)pi/(2M)), weights pi/M
///   second kind: int p(t) sqrt(1-t^2) dt,  nodes cos(k pi/(M+1)),
///                weights pi/(M+1) sin^2(k pi/(M+1))
struct QuadratureRule {
    QuadKind kind;
    std::vector<double> nodes;
    std::vector<double> weights;

    static QuadratureRule gauss_chebyshev_t(int num_nodes);
    static QuadratureRule gauss_chebyshev_u(int num_nodes);

    int size() const { return static_cast<int>(nodes.size()); }

    /// sum_k w_k f(x_k) in fixed node order, so results are reproducible.
    template <typename F>
    double integrate(F&& f) const {
        double acc = 0.0;
        for (int k = 0; k < size(); ++k) acc += weights[k] * f(nodes[k]);
        return acc;
    }
};

}  // namespace linstat

#endif
