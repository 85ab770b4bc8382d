#ifndef LINSTAT_ERRORS_HPP
#define LINSTAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace linstat {

/// Numerical failure inside an otherwise valid computation: an indefinite
/// kernel (non-positive LDL pivot) or disagreement between two evaluation
/// routes that are supposed to coincide. Distinct from std::invalid_argument,
/// which is reserved for constraint violations on inputs.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace linstat

#endif
