#ifndef LINSTAT_VARIANCE_HPP
#define LINSTAT_VARIANCE_HPP

#include <vector>

#include "linstat/chebyshev.hpp"
#include "linstat/poly.hpp"
#include "linstat/weight.hpp"

namespace linstat {

struct VarianceResult {
    double value = 0.0;        // the variance V >= 0; 0 iff deg f = 0
    BasisExpansion expansion;  // f in the weight's basis
    std::vector<double> d;     // diagonal coordinates, V = sum n d_n^2; empty when K = 0
};

struct VarianceOptions {
    /// Degree cap. The kernels stay cheap beyond this, but the closed
    /// forms grow like n^2 and erode double precision, so the default is
    /// deliberately conservative.
    int max_degree = 64;
};

/// Closed-form variance of tr f(M): expands f in the weight's orthogonal
/// basis, evaluates the diagonal formula (arcsine) or the kernel quadratic
/// form (the other three weights), computes the diagonal coordinates d via
/// the weight's transform, and cross-checks that sum n d_n^2 agrees with
/// the quadratic form to 1e-10 relative (NumericalError otherwise).
VarianceResult variance(const Poly& f, const WeightSpec& weight, const VarianceOptions& opts = {});

}  // namespace linstat

#endif
