#ifndef LINSTAT_WEIGHT_HPP
#define LINSTAT_WEIGHT_HPP

#include <string>
#include <string_view>

#include "linstat/poly.hpp"

namespace linstat {

/// The four equilibrium-density weights on (a,b), all carrying the
/// square-root factor sqrt((b-x)(x-a)):
///   Arcsine     w(x) = 1/sqrt((b-x)(x-a)),          a < b
///   Semicircle  w(x) = sqrt((b-x)(x-a)),            a < b
///   HardEdge    w(x) = sqrt((b-x)(x-a))/x,          0 < a < b
///   Jacobi      w(x) = sqrt((b-x)(x-a))/(x(1-x)),   0 < a < b < 1
enum class WeightKind { Arcsine, Semicircle, HardEdge, Jacobi };

std::string_view weight_name(WeightKind kind);
WeightKind weight_kind_from_name(std::string_view name);  // throws on unknown name

struct WeightSpec {
    WeightKind kind;
    double a;
    double b;

    /// Validates the kind-specific interval constraints; throws
    /// std::invalid_argument with a message naming the violated constraint.
    WeightSpec(WeightKind kind, double a, double b);

    static WeightSpec arcsine(double a, double b) { return {WeightKind::Arcsine, a, b}; }
    static WeightSpec semicircle(double a, double b) { return {WeightKind::Semicircle, a, b}; }
    static WeightSpec hard_edge(double a, double b) { return {WeightKind::HardEdge, a, b}; }
    static WeightSpec jacobi(double a, double b) { return {WeightKind::Jacobi, a, b}; }
    static WeightSpec from_name(std::string_view name, double a, double b);

    AffineMap interval() const { return AffineMap(a, b); }
    std::string_view name() const { return weight_name(kind); }

    bool operator==(const WeightSpec&) const = default;
};

}  // namespace linstat

#endif
