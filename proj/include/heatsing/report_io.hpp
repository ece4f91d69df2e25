#pragma once

#include "heatsing/asymptotics.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace heatsing {

struct RunConfig {
    double t_min = 1e-5;
    double t_max = 1e-2;
    int points = 6;
    double tol = 1e-11;
    int N = 3;
    double slope_tol = 0.15;
    std::string format = "csv"; // csv | json
    unsigned seed = 0;
    int threads = 1;

    // Throws DomainError naming the violated constraint.
    void validate() const;
    std::vector<double> t_grid() const; // log-spaced, descending t
};

// key=value config file; unknown keys rejected. Flags override file values,
// so the CLI applies the file first.
RunConfig load_config_file(const std::string& path);
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);

// CSV columns exactly: t, quad_value, quad_error, series_value, residual;
// trailer lines fitted_exponent, predicted_exponent, pass. 17 significant
// digits throughout.
void write_report_csv(std::ostream& os, const VerificationReport& rep);
void write_report_json(std::ostream& os, const VerificationReport& rep);

std::string format_double(double v); // %.17g

} // namespace heatsing
