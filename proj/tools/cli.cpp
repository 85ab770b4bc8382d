#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "linstat/errors.hpp"
#include "linstat/expansion.hpp"
#include "linstat/kernel.hpp"
#include "linstat/pv.hpp"
#include "linstat/variance.hpp"
#include "linstat/weight.hpp"

namespace linstat::cli {

namespace {

using nlohmann::json;

std::vector<double> parse_coeff_list(const std::string& text) {
    std::vector<double> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || first == last) {
            throw std::invalid_argument("malformed numeric input in --coeffs: \"" +
                                        std::string(first, last) + "\"");
        }
        out.push_back(value);
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("--coeffs must list at least one number");
    return out;
}

int default_max_degree() {
    if (const char* env = std::getenv("LINSTAT_MAX_DEGREE")) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
        if (ec != std::errc() || *ptr != '\0' || value < 0) {
            throw std::invalid_argument("LINSTAT_MAX_DEGREE must be a nonnegative integer");
        }
        return value;
    }
    return 64;
}

Command command_from_name(const std::string& name) {
    if (name == "variance") return Command::Variance;
    if (name == "expand") return Command::Expand;
    if (name == "kernel") return Command::Kernel;
    if (name == "transform") return Command::Transform;
    if (name == "check") return Command::Check;
    throw std::invalid_argument("unknown command \"" + name + "\"");
}

std::string command_name(Command c) {
    switch (c) {
        case Command::Variance: return "variance";
        case Command::Expand: return "expand";
        case Command::Kernel: return "kernel";
        case Command::Transform: return "transform";
        case Command::Check: return "check";
    }
    return "?";
}

JobRequest request_from_json(const json& obj, Command command, int max_degree) {
    if (!obj.is_object()) throw std::invalid_argument("input file: each case must be an object");
    JobRequest req;
    req.command = command;
    req.max_degree = max_degree;
    if (obj.contains("command")) {
        const Command file_command = command_from_name(obj.at("command").get<std::string>());
        if (file_command != command) {
            throw std::invalid_argument("input file command \"" + command_name(file_command) +
                                        "\" conflicts with the invoked subcommand");
        }
    }
    try {
        req.coeffs = obj.at("coeffs").get<std::vector<double>>();
        req.weight = obj.at("weight").get<std::string>();
        req.a = obj.at("a").get<double>();
        req.b = obj.at("b").get<double>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("input file: ") + e.what());
    }
    if (req.coeffs.empty()) throw std::invalid_argument("input file: coeffs must be non-empty");
    req.emit_kernel = obj.value("emit_kernel", false);
    req.emit_d = obj.value("emit_d", false);
    req.oracle = obj.value("oracle", false);
    return req;
}

json matrix_to_json(int size, const std::vector<double>& row_major) {
    json rows = json::array();
    for (int i = 0; i < size; ++i) {
        json row = json::array();
        for (int j = 0; j < size; ++j) row.push_back(row_major[static_cast<size_t>(i) * size + j]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string_view basis_name(Basis basis) {
    switch (basis) {
        case Basis::ChebT: return "cheb_t";
        case Basis::ChebU: return "cheb_u";
        case Basis::SzegoHardEdge: return "szego_hard_edge";
        case Basis::SzegoJacobi: return "szego_jacobi";
    }
    return "?";
}

}  // namespace

Invocation parse_args(const std::vector<std::string>& args) {
    CLI::App app{"variance of linear spectral statistics of Hermitian random-matrix ensembles",
                 "linstat"};
    app.require_subcommand(1);

    std::string coeffs_text;
    std::string input_path;
    std::string weight;
    double a = 0.0, b = 0.0;
    bool emit_kernel = false, emit_d = false, oracle = false, pretty = false;
    int max_degree = -1;

    for (const char* name : {"variance", "expand", "kernel", "transform", "check"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--coeffs", coeffs_text,
                        "monomial coefficients, ascending, comma-separated");
        sub->add_option("--input", input_path, "JSON file with the request fields (- for stdin)");
        sub->add_option("--weight", weight, "arcsine | semicircle | hard-edge | jacobi");
        sub->add_option("--a", a, "left interval endpoint");
        sub->add_option("--b", b, "right interval endpoint");
        sub->add_flag("--emit-kernel", emit_kernel, "include the kernel matrix in the output");
        sub->add_flag("--emit-d", emit_d, "include the diagonal coordinates in the output");
        sub->add_flag("--oracle", oracle, "cross-check against the principal-value oracle");
        sub->add_option("--max-degree", max_degree,
                        "degree cap (default 64, env LINSTAT_MAX_DEGREE)");
        sub->add_flag("--pretty", pretty, "indent the output object");
    }

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw std::invalid_argument(e.what());
    }

    CLI::App* active = app.get_subcommands().at(0);
    const Command command = command_from_name(active->get_name());
    const int cap = max_degree >= 0 ? max_degree : default_max_degree();

    Invocation inv;
    inv.pretty = pretty;

    if (active->count("--input") > 0) {
        if (active->count("--coeffs") || active->count("--weight") || active->count("--a") ||
            active->count("--b")) {
            throw std::invalid_argument("--input conflicts with --coeffs/--weight/--a/--b");
        }
        json doc;
        try {
            if (input_path == "-") {
                doc = json::parse(std::cin);
            } else {
                std::ifstream in(input_path);
                if (!in) throw std::invalid_argument("cannot open input file: " + input_path);
                doc = json::parse(in);
            }
        } catch (const json::exception& e) {
            throw std::invalid_argument(std::string("input file is not valid JSON: ") + e.what());
        }
        if (doc.is_array()) {
            if (command != Command::Check) {
                throw std::invalid_argument("an array input file is only valid with `check`");
            }
            if (doc.empty()) throw std::invalid_argument("input file: empty case list");
            for (const json& item : doc)
                inv.requests.push_back(request_from_json(item, command, cap));
        } else {
            JobRequest req = request_from_json(doc, command, cap);
            req.emit_kernel |= emit_kernel;
            req.emit_d |= emit_d;
            req.oracle |= oracle;
            inv.requests.push_back(std::move(req));
        }
        return inv;
    }

    if (active->count("--coeffs") == 0) {
        throw std::invalid_argument("--coeffs or --input is required");
    }
    if (active->count("--weight") == 0) {
        throw std::invalid_argument("--weight is required");
    }
    JobRequest req;
    req.command = command;
    req.max_degree = cap;
    req.coeffs = parse_coeff_list(coeffs_text);
    req.weight = weight;
    req.a = a;
    req.b = b;
    req.emit_kernel = emit_kernel;
    req.emit_d = emit_d;
    req.oracle = oracle;
    inv.requests.push_back(std::move(req));
    return inv;
}

json run(const JobRequest& request) {
    const WeightSpec weight = WeightSpec::from_name(request.weight, request.a, request.b);
    const Poly f{request.coeffs};
    const VarianceOptions opts{request.max_degree};

    const VarianceResult result = variance(f, weight, opts);
    const int K = f.degree();

    json out;
    out["meta"] = {{"weight", std::string(weight.name())},
                   {"a", weight.a},
                   {"b", weight.b},
                   {"K", K}};
    out["variance"] = result.value;
    out["expansion"] = {{"basis", std::string(basis_name(result.expansion.basis))},
                        {"coeffs", result.expansion.coeffs}};

    if (request.emit_d) out["d"] = result.d;
    if (request.emit_kernel || request.command == Command::Kernel) {
        const KernelMatrix R = build_kernel(weight, K);
        out["kernel"] = {{"prefactor", R.prefactor}, {"entries", matrix_to_json(K, R.entries)}};
    }
    if (request.command == Command::Transform) {
        const DiagonalTransform T = weight_transform(weight, K);
        out["transform"] = matrix_to_json(K, T.entries);
    }
    if (request.oracle || request.command == Command::Check) {
        const double oracle = variance_oracle(f, weight);
        const double gap = std::abs(result.value - oracle) / std::max(1.0, std::abs(result.value));
        out["oracle_variance"] = oracle;
        out["rel_gap"] = gap;
    }
    return out;
}

int run_main(const std::vector<std::string>& args) {
    const auto fail = [](const char* kind, const std::string& message, int code) {
        json err;
        err["error"] = {{"kind", kind}, {"message", message}};
        std::cerr << err.dump() << "\n";
        return code;
    };

    try {
        const Invocation inv = parse_args(args);
        const int indent = inv.pretty ? 2 : -1;

        if (inv.requests.size() == 1 && inv.requests[0].command != Command::Check) {
            std::cout << run(inv.requests[0]).dump(indent) << "\n";
            return 0;
        }
        if (inv.requests.size() == 1) {
            const json result = run(inv.requests[0]);
            std::cout << result.dump(indent) << "\n";
            return result.at("rel_gap").get<double>() <= kCheckGapLimit ? 0 : kExitNumerical;
        }

        // check over a corpus: one object per invocation, one entry per case
        json out;
        out["results"] = json::array();
        double max_gap = 0.0;
        int failures = 0;
        for (const JobRequest& req : inv.requests) {
            json result = run(req);
            const double gap = result.at("rel_gap").get<double>();
            max_gap = std::max(max_gap, gap);
            if (gap > kCheckGapLimit) ++failures;
            out["results"].push_back(std::move(result));
        }
        out["cases"] = static_cast<int>(inv.requests.size());
        out["failures"] = failures;
        out["max_rel_gap"] = max_gap;
        std::cout << out.dump(indent) << "\n";
        return failures == 0 ? 0 : kExitNumerical;
    } catch (const HelpRequested& help) {
        std::cout << help.text;
        return 0;
    } catch (const NumericalError& e) {
        return fail("numerical", e.what(), kExitNumerical);
    } catch (const std::invalid_argument& e) {
        return fail("validation", e.what(), kExitValidation);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), kExitNumerical);
    }
}

}  // namespace linstat::cli
