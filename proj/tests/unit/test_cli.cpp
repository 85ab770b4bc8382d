#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "test_util.hpp"

using namespace linstat::cli;
using linstat::testing::close_abs;
using nlohmann::json;

namespace {

std::vector<std::string> argv_of(std::initializer_list<const char*> parts) {
    return {parts.begin(), parts.end()};
}

// capture stdout/stderr around run_main
struct CapturedRun {
    int exit_code;
    std::string out;
    std::string err;
};

CapturedRun capture(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    auto* old_out = std::cout.rdbuf(out.rdbuf());
    auto* old_err = std::cerr.rdbuf(err.rdbuf());
    const int code = run_main(args);
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        char name[] = "/tmp/linstat_test_XXXXXX";
        const int fd = ::mkstemp(name);
        REQUIRE(fd >= 0);
        ::close(fd);
        path = name;
        std::ofstream(path) << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("parse_args accepts a full command line") {
    const auto inv = parse_args(
        argv_of({"variance", "--coeffs", "0,0,1", "--weight", "hard-edge", "--a", "1", "--b", "4"}));
    REQUIRE(inv.requests.size() == 1);
    const JobRequest& r = inv.requests[0];
    CHECK(r.command == Command::Variance);
    CHECK(r.coeffs == std::vector<double>{0.0, 0.0, 1.0});
    CHECK(r.weight == "hard-edge");
    CHECK(r.a == 1.0);
    CHECK(r.b == 4.0);
    CHECK(r.max_degree == 64);
}

TEST_CASE("parse_args rejects malformed requests") {
    CHECK_THROWS_AS(parse_args(argv_of({"variance", "--coeffs", "1,,2", "--weight", "arcsine",
                                        "--a", "0", "--b", "1"})),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_args(argv_of({"variance", "--coeffs", "1,2x", "--weight", "arcsine",
                                        "--a", "0", "--b", "1"})),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_args(argv_of({"variance", "--weight", "arcsine", "--a", "0", "--b", "1"})),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_args(argv_of({"variance", "--coeffs", "1", "--a", "0", "--b", "1"})),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_args(argv_of({"frobnicate", "--coeffs", "1"})), std::invalid_argument);
    CHECK_THROWS_AS(parse_args(argv_of({"variance", "--coeffs", "1", "--weight", "arcsine", "--a",
                                        "0", "--b", "1", "--no-such-flag"})),
                    std::invalid_argument);
}

TEST_CASE("parse_args input file handling") {
    TempFile file(R"({"coeffs": [0, 1], "weight": "arcsine", "a": -2, "b": 2, "oracle": true})");
    const auto inv = parse_args(argv_of({"variance", "--input", file.path.c_str()}));
    REQUIRE(inv.requests.size() == 1);
    CHECK(inv.requests[0].oracle);
    CHECK(inv.requests[0].coeffs == std::vector<double>{0.0, 1.0});

    CHECK_THROWS_AS(
        parse_args(argv_of({"variance", "--input", file.path.c_str(), "--coeffs", "0,1"})),
        std::invalid_argument);
    CHECK_THROWS_AS(parse_args(argv_of({"variance", "--input", "/no/such/file.json"})),
                    std::invalid_argument);

    TempFile conflicted(R"({"command": "kernel", "coeffs": [0,1], "weight": "arcsine", "a": 0, "b": 1})");
    CHECK_THROWS_AS(parse_args(argv_of({"variance", "--input", conflicted.path.c_str()})),
                    std::invalid_argument);

    TempFile corpus(R"([{"coeffs": [0,1], "weight": "arcsine", "a": -2, "b": 2},
                        {"coeffs": [0,0,1], "weight": "semicircle", "a": 0, "b": 1}])");
    const auto batch = parse_args(argv_of({"check", "--input", corpus.path.c_str()}));
    CHECK(batch.requests.size() == 2);
    CHECK_THROWS_AS(parse_args(argv_of({"variance", "--input", corpus.path.c_str()})),
                    std::invalid_argument);
}

TEST_CASE("parse_args reads stdin when --input is -") {
    std::istringstream feed(R"({"coeffs": [0, 2], "weight": "semicircle", "a": 0, "b": 1})");
    auto* old_in = std::cin.rdbuf(feed.rdbuf());
    const auto inv = parse_args(argv_of({"variance", "--input", "-"}));
    std::cin.rdbuf(old_in);
    REQUIRE(inv.requests.size() == 1);
    CHECK(inv.requests[0].coeffs == std::vector<double>{0.0, 2.0});
    CHECK(inv.requests[0].weight == "semicircle");
}

TEST_CASE("max degree from flag and environment") {
    ::setenv("LINSTAT_MAX_DEGREE", "12", 1);
    auto inv = parse_args(
        argv_of({"variance", "--coeffs", "0,1", "--weight", "arcsine", "--a", "0", "--b", "1"}));
    CHECK(inv.requests[0].max_degree == 12);
    inv = parse_args(argv_of({"variance", "--coeffs", "0,1", "--weight", "arcsine", "--a", "0",
                              "--b", "1", "--max-degree", "20"}));
    CHECK(inv.requests[0].max_degree == 20);
    ::setenv("LINSTAT_MAX_DEGREE", "banana", 1);
    CHECK_THROWS_AS(parse_args(argv_of({"variance", "--coeffs", "0,1", "--weight", "arcsine",
                                        "--a", "0", "--b", "1"})),
                    std::invalid_argument);
    ::unsetenv("LINSTAT_MAX_DEGREE");
}

TEST_CASE("run produces the documented results") {
    JobRequest req;
    req.command = Command::Variance;
    req.coeffs = {0.0, 1.0};
    req.weight = "arcsine";
    req.a = -2.0;
    req.b = 2.0;
    const json out = run(req);
    CHECK(out.at("variance").get<double>() == 1.0);
    CHECK(out.at("meta").at("K").get<int>() == 1);
    CHECK(out.at("expansion").at("basis").get<std::string>() == "cheb_t");
    CHECK_FALSE(out.contains("d"));
    CHECK_FALSE(out.contains("kernel"));

    JobRequest constant = req;
    constant.coeffs = {3.0};
    constant.weight = "jacobi";
    constant.a = 0.25;
    constant.b = 0.75;
    CHECK(run(constant).at("variance").get<double>() == 0.0);

    JobRequest kern;
    kern.command = Command::Kernel;
    kern.coeffs = {0.0, 0.0, 1.0};
    kern.weight = "semicircle";
    kern.a = 0.0;
    kern.b = 1.0;
    const json kout = run(kern);
    const auto entries = kout.at("kernel").at("entries");
    CHECK(entries == json::parse("[[4.0,0.0],[0.0,8.0]]"));
    CHECK(kout.at("kernel").at("prefactor").get<double>() == 0.25);

    JobRequest bad = req;
    bad.weight = "jacobi";
    bad.a = 0.2;
    bad.b = 1.5;
    CHECK_THROWS_WITH_AS(run(bad), "jacobi requires 0 < a < b < 1", std::invalid_argument);
}

TEST_CASE("run_main output is byte-identical across repeated runs") {
    const auto args = argv_of({"variance", "--coeffs", "0.1,0.2,0.3", "--weight", "hard-edge",
                               "--a", "0.5", "--b", "2.5", "--emit-d", "--oracle"});
    const auto first = capture(args);
    const auto second = capture(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.err.empty());
    // round-trip parse of the emitted numbers reproduces them exactly
    const json parsed = json::parse(first.out);
    CHECK(json::parse(parsed.dump()) == parsed);
}

TEST_CASE("run_main exit codes and error objects") {
    const auto ok = capture(argv_of(
        {"check", "--coeffs", "1,2,3,4", "--weight", "semicircle", "--a", "0", "--b", "1"}));
    CHECK(ok.exit_code == 0);
    const json out = json::parse(ok.out);
    CHECK(out.at("rel_gap").get<double>() <= 1e-8);

    const auto invalid = capture(argv_of(
        {"variance", "--weight", "jacobi", "--a", "0.2", "--b", "1.5", "--coeffs", "0,1"}));
    CHECK(invalid.exit_code == kExitValidation);
    CHECK(invalid.out.empty());
    const json err = json::parse(invalid.err);
    CHECK(err.at("error").at("kind").get<std::string>() == "validation");
    CHECK(err.at("error").at("message").get<std::string>() == "jacobi requires 0 < a < b < 1");

    const auto cap = capture(argv_of({"variance", "--coeffs", "0,1,1", "--weight", "arcsine",
                                      "--a", "0", "--b", "1", "--max-degree", "1"}));
    CHECK(cap.exit_code == kExitValidation);

    const auto help = capture(argv_of({"--help"}));
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("linstat") != std::string::npos);
}

TEST_CASE("transform command emits the triangular matrix") {
    const auto res = capture(argv_of({"transform", "--coeffs", "0,0,0,1", "--weight", "semicircle",
                                      "--a", "0", "--b", "1"}));
    CHECK(res.exit_code == 0);
    const json out = json::parse(res.out);
    CHECK(out.at("transform") == json::parse("[[1.0,0.0,-1.0],[0.0,1.0,0.0],[0.0,0.0,1.0]]"));
}
