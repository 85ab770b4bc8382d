#ifndef LINSTAT_POLY_HPP
#define LINSTAT_POLY_HPP

#include <vector>

namespace linstat {

/// Real polynomial in the monomial basis; coeffs()[j] multiplies x^j.
/// The all-zero coefficient list is the zero polynomial (degree 0 by
/// convention).
class Poly {
public:
    Poly() : coeffs_{0.0} {}
    explicit Poly(std::vector<double> coeffs);

    static Poly monomial(int degree, double coeff = 1.0);

    /// Highest index with a nonzero entry; 0 for the zero polynomial.
    int degree() const { return degree_; }
    bool is_zero() const;

    const std::vector<double>& coeffs() const { return coeffs_; }

    /// Coefficient of x^j, 0 outside the stored range.
    double coeff(int j) const;

    double eval(double x) const;
    Poly derivative() const;

    /// f(p + q*x) as a polynomial in x.
    Poly compose_affine(double p, double q) const;

    Poly operator+(const Poly& other) const;
    Poly operator*(double s) const;

private:
    std::vector<double> coeffs_;
    int degree_ = 0;
};

/// Affine change of variable between [a,b] and [-1,1]:
/// tau = (2x - (b+a))/(b-a), so x=a maps to -1 and x=b to +1.
struct AffineMap {
    double a;
    double b;

    AffineMap(double a, double b);  // throws std::invalid_argument unless a < b

    double to_unit(double x) const { return (2.0 * x - (b + a)) / (b - a); }
    double from_unit(double tau) const { return 0.5 * (b - a) * tau + 0.5 * (b + a); }
    double half_width() const { return 0.5 * (b - a); }
    double midpoint() const { return 0.5 * (a + b); }

    bool operator==(const AffineMap&) const = default;
};

}  // namespace linstat

#endif
