#ifndef LINSTAT_CLI_HPP
#define LINSTAT_CLI_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace linstat::cli {

enum class Command { Variance, Expand, Kernel, Transform, Check };

/// One fully-specified job. The kernel size and transform size equal the
/// degree of `coeffs`.
struct JobRequest {
    Command command = Command::Variance;
    std::vector<double> coeffs;      // monomial, ascending
    std::string weight;              // arcsine | semicircle | hard-edge | jacobi
    double a = 0.0;
    double b = 0.0;
    bool emit_kernel = false;
    bool emit_d = false;
    bool oracle = false;
    int max_degree = 64;
};

struct Invocation {
    std::vector<JobRequest> requests;  // several only for `check --input <array>`
    bool pretty = false;
};

/// Thrown by parse_args when --help is requested.
struct HelpRequested {
    std::string text;
};

/// Exit statuses: 0 success, 2 validation error, 3 numerical failure.
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

/// The `check` command fails when the oracle gap exceeds this.
inline constexpr double kCheckGapLimit = 1e-6;

/// Parse argv (without the program name). Throws std::invalid_argument on
/// unknown flags, malformed numbers, conflicting --coeffs/--input, or a
/// bad input file.
Invocation parse_args(const std::vector<std::string>& args);

/// Run one job. Throws std::invalid_argument (validation) or
/// linstat::NumericalError. The returned object always carries variance,
/// expansion and meta; d, kernel, transform, oracle_variance and rel_gap
/// appear per command and flags.
nlohmann::json run(const JobRequest& request);

/// Full process behavior: parse, run, print the result object on stdout or
/// a structured error object on stderr, and return the exit status.
int run_main(const std::vector<std::string>& args);

}  // namespace linstat::cli

#endif
