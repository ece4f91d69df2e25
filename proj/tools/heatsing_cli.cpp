// Command-line front end: closed-form coefficients, singular quadrature,
// series-vs-quadrature verification, log-plane fits, the recursion check,
// ladder certification with sigma dumps, the circle comparison, and
// boundary-condition runs.

#include "heatsing/asymptotics.hpp"
#include "heatsing/boundary.hpp"
#include "heatsing/coefficients.hpp"
#include "heatsing/ladder.hpp"
#include "heatsing/quadrature.hpp"
#include "heatsing/report_io.hpp"
#include "heatsing/spectral.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

using namespace heatsing;

// "re" or "re+imi" / "re-imi"
Complex parse_complex(const std::string& text) {
    std::string s = text;
    if (!s.empty() && (s.back() == 'i' || s.back() == 'I')) {
        s.pop_back();
        // split at the last +/- that is not an exponent sign or leading
        size_t pos = std::string::npos;
        for (size_t i = s.size(); i-- > 1;) {
            if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
                pos = i;
                break;
            }
        }
        if (pos == std::string::npos) return Complex(0.0, std::stod(s));
        double re = std::stod(s.substr(0, pos));
        std::string imtxt = s.substr(pos);
        double im = (imtxt == "+" ? 1.0 : imtxt == "-" ? -1.0 : std::stod(imtxt));
        return Complex(re, im);
    }
    return Complex(std::stod(s), 0.0);
}

struct OutputSink {
    std::string path;
    std::ostream& stream() {
        if (path.empty()) return std::cout;
        if (!file) {
            file = std::make_unique<std::ofstream>(path);
            if (!*file) throw DomainError("cannot open output file " + path);
        }
        return *file;
    }
    std::unique_ptr<std::ofstream> file;
};

int threads_default() {
    if (const char* env = std::getenv("HEATCONTENT_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

int cmd_coeff(const std::string& sa, const std::string& sb, int N, OutputSink& out) {
    ParamPair p(parse_complex(sa), parse_complex(sb));
    RegionTag tag = p.region();
    if (tag.kind == RegionTag::Kind::LogPlane) {
        std::cerr << "a+b on log plane k=" << tag.log_k << "\n";
        return 2;
    }
    if (tag.kind == RegionTag::Kind::Invalid) {
        std::cerr << "a+b on an excluded sum 1,-1,-3,... (complex entries)\n";
        return 2;
    }
    auto& os = out.stream();
    os << "region,in_O\n";
    os << "power,coeff_re,coeff_im\n";
    // boundary row first, then n = 0..N
    double bpow = (1.0 - p.sum().real()) / 2.0;
    Complex bc = c_boundary(p);
    os << format_double(bpow) << "," << format_double(bc.real()) << ","
       << format_double(bc.imag()) << "\n";
    for (int n = 0; n <= N; ++n) {
        Complex c = c_n(n, p);
        os << format_double(n / 2.0) << "," << format_double(c.real()) << ","
           << format_double(c.imag()) << "\n";
    }
    return 0;
}

int cmd_heat(double a, double b, double t, double tol, OutputSink& out) {
    QuadResult q = heat_content_interval(ParamPair(a, b), t, std::nullopt, tol);
    auto& os = out.stream();
    os << "value," << format_double(q.value) << "\n";
    os << "error_estimate," << format_double(q.error_estimate) << "\n";
    os << "nodes," << q.nodes_used << "\n";
    return 0;
}

int cmd_verify(double a, double b, const RunConfig& cfg, OutputSink& out) {
    VerificationReport rep =
        verify_expansion(ParamPair(a, b), cfg.t_grid(), cfg.N, cfg.tol, cfg.slope_tol,
                         cfg.threads);
    if (cfg.format == "json")
        write_report_json(out.stream(), rep);
    else
        write_report_csv(out.stream(), rep);
    return rep.pass ? 0 : 1;
}

int cmd_logverify(double a, int k, const RunConfig& cfg, OutputSink& out) {
    VerificationReport rep = verify_logplane(a, k, cfg.t_grid(), cfg.tol);
    if (cfg.format == "json")
        write_report_json(out.stream(), rep);
    else
        write_report_csv(out.stream(), rep);
    return rep.pass ? 0 : 1;
}

int cmd_recursion(double a, double b, double t, int N, double max_residual,
                  OutputSink& out) {
    double r = verify_recursion(ParamPair(a, b), t, N);
    out.stream() << "residual," << format_double(r) << "\n";
    return r <= max_residual ? 0 : 1;
}

int cmd_ladder(int k, int T, const std::string& dump_path, OutputSink& out) {
    try {
        Ladder ladder(T);
        if (!dump_path.empty()) {
            std::ofstream f(dump_path);
            if (!f) throw DomainError("cannot open dump file " + dump_path);
            ladder.dump_sigma_json(k, f);
        } else {
            ladder.dump_sigma_json(k, out.stream());
        }
        return 0;
    } catch (const DivisionNotExactError& e) {
        std::cerr << "ladder certification failed: " << e.step << "\n";
        return 1;
    }
}

int cmd_spectral(OutputSink& out) {
    // circle-vs-line closeness for constant data on [0, 2 pi - 1/sqrt(2)]:
    // the wrap gap makes the true decay rate exactly exp(-1/(8t))
    const double len = 2.0 * M_PI - 1.0 / std::sqrt(2.0);
    const std::vector<double> ts = {0.02, 0.01, 0.005};
    FourierProfile prof = indicator_coefficients(len, 256);
    auto& os = out.stream();
    os << "t,beta_circle,beta_line,abs_diff\n";
    std::vector<double> xs, ys;
    for (double t : ts) {
        double bc = heat_content_circle(prof, prof, t);
        double bl = constant_data_line_content(len, t);
        double d = std::abs(bc - bl);
        os << format_double(t) << "," << format_double(bc) << "," << format_double(bl)
           << "," << format_double(d) << "\n";
        if (d > 1e-14) {
            xs.push_back(1.0 / t);
            ys.push_back(std::log(d));
        }
    }
    if (xs.size() < 2) {
        os << "slope,below_floor\npass,true\n";
        return 0;
    }
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    double slope = sxy / sxx;
    os << "slope," << format_double(slope) << "\n";
    bool pass = slope <= -0.125;
    os << "pass," << (pass ? "true" : "false") << "\n";
    return pass ? 0 : 1;
}

int cmd_bc(double a, double b, const std::string& left, const std::string& right,
           const RunConfig& cfg, OutputSink& out) {
    BCSpec bc;
    bc.left = (left == "N" || left == "neumann") ? BC::Neumann : BC::Dirichlet;
    bc.right = (right == "N" || right == "neumann") ? BC::Neumann : BC::Dirichlet;
    BoundaryReport rep = verify_bc_expansion(ParamPair(a, b), cfg.t_grid(), bc, 1, cfg.tol,
                                          cfg.slope_tol);
    auto& os = out.stream();
    os << "t,bc_value,bc_error,model_value,residual\n";
    for (size_t i = 0; i < rep.t_grid.size(); ++i)
        os << format_double(rep.t_grid[i]) << "," << format_double(rep.bc_values[i]) << ","
           << format_double(rep.bc_errors[i]) << "," << format_double(rep.model_values[i])
           << "," << format_double(rep.residuals[i]) << "\n";
    os << "fitted_exponent," << format_double(rep.fitted_exponent) << "\n";
    os << "predicted_exponent," << format_double(rep.predicted_exponent) << "\n";
    os << "pass," << (rep.pass ? "true" : "false") << "\n";
    return rep.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"heat content of [0,1] with power-singular data: closed forms, "
                 "singular quadrature, and verification suites"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.threads = threads_default();
    std::string config_path;
    OutputSink out;

    app.add_option("--config", config_path, "key=value config file");
    app.add_option("--out", out.path, "write output to this path instead of stdout");

    std::string arg_a = "0.3", arg_b = "0.4";
    double num_a = 0.3, num_b = 0.4, arg_t = 1e-3;
    int arg_N = 3, arg_k = 0, arg_T = 18;
    double max_residual = 1e-8;
    std::string dump_path, bc_left = "D", bc_right = "D";

    auto add_grid_opts = [&](CLI::App* sub) {
        sub->add_option("--tmin", cfg.t_min, "smallest t");
        sub->add_option("--tmax", cfg.t_max, "largest t");
        sub->add_option("--points", cfg.points, "grid size (>= 4)");
        sub->add_option("--tol", cfg.tol, "quadrature tolerance");
        sub->add_option("--slope-tol", cfg.slope_tol, "residual slope tolerance");
        sub->add_option("--format", cfg.format, "csv or json");
        sub->add_option("--seed", cfg.seed, "seed for randomized sweeps");
        sub->add_option("--threads", cfg.threads, "concurrent quadrature evaluations");
    };

    auto* coeff = app.add_subcommand("coeff", "closed-form coefficient table");
    coeff->add_option("-a", arg_a, "exponent a (re or re+imi)")->required();
    coeff->add_option("-b", arg_b, "exponent b")->required();
    coeff->add_option("-N", arg_N, "highest series index");

    auto* heat = app.add_subcommand("heat", "single heat-content quadrature");
    heat->add_option("-a", num_a)->required();
    heat->add_option("-b", num_b)->required();
    heat->add_option("-t", arg_t)->required();
    heat->add_option("--tol", cfg.tol);

    auto* verify = app.add_subcommand("verify", "series vs quadrature residual fit");
    verify->add_option("-a", num_a);
    verify->add_option("-b", num_b);
    verify->add_option("-N", cfg.N);
    add_grid_opts(verify);

    auto* logverify = app.add_subcommand("logverify", "log-plane coefficient fit");
    logverify->add_option("-a", num_a)->required();
    logverify->add_option("-k", arg_k, "log plane index");
    add_grid_opts(logverify);

    auto* recursion = app.add_subcommand("recursion", "shifted-parameter identity residual");
    recursion->add_option("-a", num_a)->required();
    recursion->add_option("-b", num_b)->required();
    recursion->add_option("-t", arg_t)->required();
    recursion->add_option("-N", arg_N);
    recursion->add_option("--max-residual", max_residual);

    auto* ladder = app.add_subcommand("ladder", "exact ladder certification + sigma dump");
    ladder->add_option("-k", arg_k, "table index in [0,3]")->required();
    ladder->add_option("-T", arg_T, "series truncation order (>= 18)");
    ladder->add_option("--dump", dump_path, "write sigma table JSON here");

    auto* spectral = app.add_subcommand("spectral", "circle vs line comparison");

    auto* bccmd = app.add_subcommand("bc", "boundary-condition expansion fit");
    bccmd->add_option("-a", num_a)->required();
    bccmd->add_option("-b", num_b)->required();
    bccmd->add_option("--left", bc_left, "D or N");
    bccmd->add_option("--right", bc_right, "D or N");
    add_grid_opts(bccmd);

    // let --config/--out (registered on the app) appear after a subcommand
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) {
            // file supplies values for anything the command line left
            // untouched; flags the user actually passed win
            RunConfig file_cfg = load_config_file(config_path);
            auto* sub = app.get_subcommands().front();
            auto overridden = [&](const std::string& name) {
                auto* o = sub->get_option_no_throw(name);
                return o && o->count() > 0;
            };
            if (!overridden("--tmin")) cfg.t_min = file_cfg.t_min;
            if (!overridden("--tmax")) cfg.t_max = file_cfg.t_max;
            if (!overridden("--points")) cfg.points = file_cfg.points;
            if (!overridden("--tol")) cfg.tol = file_cfg.tol;
            if (!overridden("--slope-tol")) cfg.slope_tol = file_cfg.slope_tol;
            if (!overridden("--format")) cfg.format = file_cfg.format;
            if (!overridden("--seed")) cfg.seed = file_cfg.seed;
            if (!overridden("--threads")) cfg.threads = file_cfg.threads;
        }

        if (coeff->parsed()) return cmd_coeff(arg_a, arg_b, arg_N, out);
        if (heat->parsed()) return cmd_heat(num_a, num_b, arg_t, cfg.tol, out);
        if (verify->parsed()) {
            cfg.validate();
            return cmd_verify(num_a, num_b, cfg, out);
        }
        if (logverify->parsed()) {
            cfg.validate();
            return cmd_logverify(num_a, arg_k, cfg, out);
        }
        if (recursion->parsed())
            return cmd_recursion(num_a, num_b, arg_t, arg_N, max_residual, out);
        if (ladder->parsed()) {
            if (arg_k < 0 || arg_k > 3) {
                std::cerr << "ladder: k must be in [0, 3]\n";
                return 2;
            }
            return cmd_ladder(arg_k, arg_T, dump_path, out);
        }
        if (spectral->parsed()) return cmd_spectral(out);
        if (bccmd->parsed()) {
            cfg.validate();
            return cmd_bc(num_a, num_b, bc_left, bc_right, cfg, out);
        }
    } catch (const DomainError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const LogPlaneError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const RegionError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
