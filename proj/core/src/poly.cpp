#include "linstat/poly.hpp"

#include <cmath>
#include <stdexcept>

namespace linstat {

namespace {

int degree_of(const std::vector<double>& c) {
    for (int j = static_cast<int>(c.size()) - 1; j > 0; --j) {
        if (c[j] != 0.0) return j;
    }
    return 0;
}

}  // namespace

Poly::Poly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("Poly: empty coefficient list");
    for (double c : coeffs_) {
        if (!std::isfinite(c)) throw std::invalid_argument("Poly: non-finite coefficient");
    }
    degree_ = degree_of(coeffs_);
}

Poly Poly::monomial(int degree, double coeff) {
    if (degree < 0) throw std::invalid_argument("Poly::monomial: negative degree");
    std::vector<double> c(degree + 1, 0.0);
    c[degree] = coeff;
    return Poly(std::move(c));
}

bool Poly::is_zero() const {
    return degree_ == 0 && coeffs_[0] == 0.0;
}

double Poly::coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(coeffs_.size())) return 0.0;
    return coeffs_[j];
}

double Poly::eval(double x) const {
    double acc = 0.0;
    for (int j = degree_; j >= 0; --j) acc = acc * x + coeffs_[j];
    return acc;
}

Poly Poly::derivative() const {
    if (degree_ == 0) return Poly();
    std::vector<double> d(degree_);
    for (int j = 1; j <= degree_; ++j) d[j - 1] = j * coeffs_[j];
    return Poly(std::move(d));
}

Poly Poly::compose_affine(double p, double q) const {
    // Horner in the linear polynomial p + q*x.
    std::vector<double> acc{coeffs_[degree_]};
    for (int j = degree_ - 1; j >= 0; --j) {
        std::vector<double> next(acc.size() + 1, 0.0);
        for (size_t i = 0; i < acc.size(); ++i) {
            next[i] += acc[i] * p;
            next[i + 1] += acc[i] * q;
        }
        next[0] += coeffs_[j];
        acc = std::move(next);
    }
    return Poly(std::move(acc));
}

Poly Poly::operator+(const Poly& other) const {
    std::vector<double> c(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
    for (size_t j = 0; j < coeffs_.size(); ++j) c[j] += coeffs_[j];
    for (size_t j = 0; j < other.coeffs_.size(); ++j) c[j] += other.coeffs_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(double s) const {
    std::vector<double> c = coeffs_;
    for (double& v : c) v *= s;
    return Poly(std::move(c));
}

AffineMap::AffineMap(double a_, double b_) : a(a_), b(b_) {
    if (!(std::isfinite(a) && std::isfinite(b)) || !(a < b)) {
        throw std::invalid_argument("AffineMap: interval requires a < b");
    }
}

}  // namespace linstat
