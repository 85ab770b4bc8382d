#include "linstat/variance.hpp"

#include <cmath>
#include <string>

#include "linstat/errors.hpp"
#include "linstat/expansion.hpp"
#include "linstat/kernel.hpp"

namespace linstat {

VarianceResult variance(const Poly& f, const WeightSpec& weight, const VarianceOptions& opts) {
    const int K = f.degree();
    if (K > opts.max_degree) {
        throw std::invalid_argument("variance: polynomial degree " + std::to_string(K) +
                                    " exceeds the cap " + std::to_string(opts.max_degree));
    }

    BasisExpansion expansion = expand_in_weight_basis(f, weight);
    if (K == 0) return {0.0, std::move(expansion), {}};

    const double value = weight.kind == WeightKind::Arcsine
                             ? variance_w1(expansion)
                             : variance_quadratic(expansion, build_kernel(weight, K));

    const DiagonalTransform T = weight_transform(weight, K);
    std::vector<double> d =
        T.solve(std::span<const double>(expansion.coeffs.data() + 1, static_cast<size_t>(K)));

    double diag_sum = 0.0;
    for (int n = 1; n <= K; ++n) diag_sum += n * d[n - 1] * d[n - 1];
    if (std::abs(value - diag_sum) > 1e-10 * std::max(1.0, std::abs(value))) {
        throw NumericalError("variance: closed form and diagonal form disagree");
    }

    return {value, std::move(expansion), std::move(d)};
}

}  // namespace linstat
