#include "heatsing/report_io.hpp"
#include "heatsing/errors.hpp"

#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace heatsing;

namespace {
VerificationReport sample_report() {
    VerificationReport rep;
    rep.t_grid = {1e-2, 1e-3, 1e-4, 1e-5};
    rep.quad_values = {1.5, 1.25, 1.125, 1.0625};
    rep.quad_errors = {1e-12, 1e-12, 1e-12, 1e-12};
    rep.series_values = {1.4, 1.24, 1.124, 1.06249};
    rep.residuals = {0.1, 0.01, 0.001, 1e-5};
    rep.fitted_exponent = 1.98;
    rep.predicted_exponent = 2.0;
    rep.pass = true;
    return rep;
}
} // namespace

TEST_CASE("config validation rules") {
    RunConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.points = 2;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg.points = 6;
    cfg.t_min = 1e-9;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg.t_min = 1e-5;
    cfg.t_max = 2.0;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg.t_max = 1e-2;
    cfg.format = "xml";
    CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("t grid is log spaced, descending, inclusive") {
    RunConfig cfg;
    cfg.t_min = 1e-5;
    cfg.t_max = 1e-2;
    cfg.points = 4;
    auto g = cfg.t_grid();
    REQUIRE(g.size() == 4);
    CHECK(g.front() == doctest::Approx(1e-2));
    CHECK(g.back() == doctest::Approx(1e-5));
    CHECK(g[1] / g[0] == doctest::Approx(g[2] / g[1]).epsilon(1e-12));
}

TEST_CASE("config file parsing") {
    const char* path = "hs_test_config.tmp";
    {
        std::ofstream f(path);
        f << "# comment\n"
          << "t_min=1e-4\n"
          << "points=8\n"
          << "format=json\n";
    }
    RunConfig cfg = load_config_file(path);
    CHECK(cfg.t_min == doctest::Approx(1e-4));
    CHECK(cfg.points == 8);
    CHECK(cfg.format == "json");
    std::remove(path);
    CHECK_THROWS_AS(load_config_file("does_not_exist.cfg"), DomainError);

    RunConfig c2;
    CHECK_THROWS_AS(apply_config_entry(c2, "bogus", "1"), DomainError);
    CHECK_THROWS_AS(apply_config_entry(c2, "points", "many"), DomainError);
}

TEST_CASE("csv emission: exact column contract and determinism") {
    VerificationReport rep = sample_report();
    std::ostringstream os1, os2;
    write_report_csv(os1, rep);
    write_report_csv(os2, rep);
    CHECK(os1.str() == os2.str()); // byte-identical on identical input
    std::istringstream in(os1.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "t,quad_value,quad_error,series_value,residual");
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.rfind("fitted_exponent,", 0) == 0) break;
        ++rows;
    }
    CHECK(rows == 4);
    std::getline(in, line);
    CHECK(line.rfind("predicted_exponent,", 0) == 0);
    std::getline(in, line);
    CHECK(line == "pass,true");
}

TEST_CASE("csv round-trips doubles at 17 significant digits") {
    double v = 0.1234567890123456789;
    std::string s = format_double(v);
    CHECK(std::stod(s) == v);
    CHECK(format_double(1.0) == "1");
}

TEST_CASE("json emission: single object, equal-length arrays") {
    VerificationReport rep = sample_report();
    std::ostringstream os;
    write_report_json(os, rep);
    auto j = nlohmann::json::parse(os.str());
    REQUIRE(j.is_object());
    size_t n = j["t"].size();
    CHECK(j["quad_value"].size() == n);
    CHECK(j["quad_error"].size() == n);
    CHECK(j["series_value"].size() == n);
    CHECK(j["residual"].size() == n);
    CHECK(j["pass"].get<bool>());
}
