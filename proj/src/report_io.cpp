#include "heatsing/report_io.hpp"
#include "heatsing/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace heatsing {

void RunConfig::validate() const {
    if (!(t_min >= 1e-7)) throw DomainError("config: t_min >= 1e-7 required");
    if (!(t_max <= 1.0)) throw DomainError("config: t_max <= 1 required");
    if (!(t_min < t_max)) throw DomainError("config: t_min < t_max required");
    if (points < 4) throw DomainError("config: points >= 4 required");
    if (!(tol > 0.0)) throw DomainError("config: tol > 0 required");
    if (N < 0) throw DomainError("config: N >= 0 required");
    if (!(slope_tol > 0.0)) throw DomainError("config: slope_tol > 0 required");
    if (format != "csv" && format != "json")
        throw DomainError("config: format must be csv or json");
    if (threads < 1) throw DomainError("config: threads >= 1 required");
}

std::vector<double> RunConfig::t_grid() const {
    std::vector<double> grid;
    double llo = std::log(t_min), lhi = std::log(t_max);
    for (int i = 0; i < points; ++i) {
        double f = (points == 1) ? 0.0 : static_cast<double>(i) / (points - 1);
        grid.push_back(std::exp(lhi + f * (llo - lhi)));
    }
    return grid;
}

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
    try {
        if (key == "t_min")
            cfg.t_min = std::stod(value);
        else if (key == "t_max")
            cfg.t_max = std::stod(value);
        else if (key == "points")
            cfg.points = std::stoi(value);
        else if (key == "tol")
            cfg.tol = std::stod(value);
        else if (key == "N")
            cfg.N = std::stoi(value);
        else if (key == "slope_tol")
            cfg.slope_tol = std::stod(value);
        else if (key == "format")
            cfg.format = value;
        else if (key == "seed")
            cfg.seed = static_cast<unsigned>(std::stoul(value));
        else if (key == "threads")
            cfg.threads = std::stoi(value);
        else
            throw DomainError("config: unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
        throw DomainError("config: bad value for '" + key + "'");
    }
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("config: cannot open " + path);
    RunConfig cfg;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw DomainError("config: expected key=value: " + line);
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        apply_config_entry(cfg, key, value);
    }
    return cfg;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_report_csv(std::ostream& os, const VerificationReport& rep) {
    os << "t,quad_value,quad_error,series_value,residual\n";
    for (size_t i = 0; i < rep.t_grid.size(); ++i) {
        os << format_double(rep.t_grid[i]) << "," << format_double(rep.quad_values[i]) << ","
           << format_double(rep.quad_errors[i]) << "," << format_double(rep.series_values[i])
           << "," << format_double(rep.residuals[i]) << "\n";
    }
    os << "fitted_exponent," << format_double(rep.fitted_exponent) << "\n";
    os << "predicted_exponent," << format_double(rep.predicted_exponent) << "\n";
    os << "pass," << (rep.pass ? "true" : "false") << "\n";
}

void write_report_json(std::ostream& os, const VerificationReport& rep) {
    nlohmann::json j;
    j["t"] = rep.t_grid;
    j["quad_value"] = rep.quad_values;
    j["quad_error"] = rep.quad_errors;
    j["series_value"] = rep.series_values;
    j["residual"] = rep.residuals;
    j["fitted_exponent"] = rep.fitted_exponent;
    j["predicted_exponent"] = rep.predicted_exponent;
    if (rep.fitted_log_coeff) j["fitted_log_coeff"] = *rep.fitted_log_coeff;
    j["below_floor"] = rep.below_floor;
    j["pass"] = rep.pass;
    os << j.dump(2) << "\n";
}

} // namespace heatsing
