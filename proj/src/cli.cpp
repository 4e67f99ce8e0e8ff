#include "polar_jacobi/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <regex>
#include <sstream>
#include <tuple>
#include <vector>

#include "polar_jacobi/errors.hpp"
#include "polar_jacobi/polar.hpp"
#include "polar_jacobi/verify.hpp"
#include "polar_jacobi/zeros.hpp"

namespace pj {
namespace {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string pair(Complex z) { return "[" + num(z.real()) + "," + num(z.imag()) + "]"; }

struct Config {
    std::string alpha = "0";
    std::string beta = "0";
    std::string xi = "1";
    std::string z;
    int n = 5;
    int sweep_count = 0;
    double sweep_radius = 1.0;
    std::string format = "json";
    double tol = kRootTolerance;
    std::string out;
    std::string figure;
};

struct Parsed {
    Complex alpha;
    Complex beta;
    Complex xi;
};

Complex complex_arg(const std::string& text, const char* name) {
    const auto v = parse_complex(text);
    if (!v) throw CLI::ValidationError(std::string("--") + name, "expected RE[+-IMi], got '" + text + "'");
    return *v;
}

std::string header(int n, const Parsed& p) {
    return "\"n\":" + std::to_string(n) + ",\"alpha\":" + pair(p.alpha) + ",\"beta\":" + pair(p.beta);
}

std::string zeros_json(const ZeroSet& zs) {
    std::string s = "[";
    for (std::size_t i = 0; i < zs.roots.size(); ++i) {
        const Root& r = zs.roots[i];
        if (i) s += ",";
        s += "{\"z\":" + pair(r.z) + ",\"mult\":" + std::to_string(r.multiplicity) + ",\"residual\":" + num(r.residual) + "}";
    }
    return s + "]";
}

struct RootRecord {
    int k;
    Complex xi;
    ZeroSet zeros;
    DiskBound disk;
    double level;
};

RootRecord solve_record(const PolarSpec& spec, int k, double tol) {
    ZeroSet zs = find_roots(polar_poly(spec), tol);
    const DiskBound d = disk_bound_check(zs, spec.pole);
    double level = 0.0;
    for (double r : level_curve_residuals(zs, spec)) level = std::max(level, r);
    return {k, spec.pole, std::move(zs), d, level};
}

// Sweep samples run concurrently; results are collected in k order.
std::vector<RootRecord> solve_sweep(const std::vector<PolarSpec>& specs, double tol) {
    std::vector<std::future<RootRecord>> jobs;
    for (std::size_t k = 0; k < specs.size(); ++k)
        jobs.push_back(std::async(std::launch::async, solve_record, specs[k], static_cast<int>(k), tol));
    std::vector<RootRecord> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

void cmd_coeffs(const Config& cfg, const Parsed& p, std::ostream& os) {
    const PolarSpec spec{{p.alpha, p.beta}, p.xi, cfg.n};
    std::optional<Poly> rec;
    std::optional<Poly> div;
    try {
        rec = polar_poly_recurrence(spec);
    } catch (const DegenerateParams&) {
    }
    try {
        div = polar_poly_divdiff(spec);
    } catch (const DegenerateParams&) {
        if (!rec) throw;
    }
    const Poly& poly = rec ? *rec : *div;
    os << "{" << header(cfg.n, p) << ",\"xi\":" << pair(p.xi) << ",\"coeffs\":[";
    for (int k = 0; k <= poly.degree(); ++k) os << (k ? "," : "") << pair(poly[k]);
    os << "],\"cross_check_residual\":" << (rec && div ? num(relative_difference(*rec, *div)) : "null")
       << ",\"near_degenerate\":" << (degeneracy_margin(spec) < kNearDegenerate ? "true" : "false") << "}\n";
}

void cmd_eval(const Config& cfg, const Parsed& p, std::ostream& os) {
    if (cfg.z.empty()) throw CLI::RequiredError("--z");
    const Complex z = complex_arg(cfg.z, "z");
    const Complex v = eval(polar_poly({{p.alpha, p.beta}, p.xi, cfg.n}), z);
    os << "{" << header(cfg.n, p) << ",\"xi\":" << pair(p.xi) << ",\"z\":" << pair(z) << ",\"value\":" << pair(v)
       << "}\n";
}

void write_root_csv(const std::vector<RootRecord>& records, std::ostream& os) {
    std::vector<std::tuple<int, double, double, int, double>> rows;
    for (const RootRecord& r : records)
        for (const Root& z : r.zeros.roots) rows.emplace_back(r.k, z.z.real(), z.z.imag(), z.multiplicity, z.residual);
    std::sort(rows.begin(), rows.end());
    os << "k,re,im,mult,residual\n";
    for (const auto& [k, re, im, m, res] : rows)
        os << k << "," << num(re) << "," << num(im) << "," << m << "," << num(res) << "\n";
}

std::string record_json(const RootRecord& r, bool with_k) {
    std::string s = "{";
    if (with_k) s += "\"k\":" + std::to_string(r.k) + ",\"xi\":" + pair(r.xi) + ",";
    s += "\"zeros\":" + zeros_json(r.zeros) + ",\"disk_radius\":" + num(r.disk.radius) +
         ",\"max_excess\":" + num(r.disk.max_excess) + ",\"level_curve_max_residual\":" + num(r.level) + "}";
    return s;
}

int cmd_roots(const Config& cfg, const Parsed& p, std::ostream& os) {
    const JacobiParams params(p.alpha, p.beta);
    std::vector<PolarSpec> specs;
    if (cfg.sweep_count > 0) {
        for (int k = 0; k < cfg.sweep_count; ++k)
            specs.push_back({params, sweep_pole(cfg.sweep_radius, k, cfg.sweep_count), cfg.n});
    } else {
        specs.push_back({params, p.xi, cfg.n});
    }
    const std::vector<RootRecord> records = solve_sweep(specs, cfg.tol);
    if (cfg.format == "csv") {
        write_root_csv(records, os);
        return kExitOk;
    }
    if (cfg.sweep_count == 0) {
        const std::string body = record_json(records[0], false);
        os << "{" << header(cfg.n, p) << ",\"xi\":" << pair(p.xi) << "," << body.substr(1) << "\n";
        return kExitOk;
    }
    os << "{" << header(cfg.n, p) << ",\"sweep_count\":" << cfg.sweep_count
       << ",\"sweep_radius\":" << num(cfg.sweep_radius) << ",\"records\":[";
    for (std::size_t i = 0; i < records.size(); ++i) os << (i ? "," : "") << record_json(records[i], true);
    os << "]}\n";
    return kExitOk;
}

int cmd_verify(const Config& cfg, const Parsed& p, bool user_spec, bool user_tol, std::ostream& os) {
    VerifyOptions opt;
    if (user_spec) opt.spec = PolarSpec{{p.alpha, p.beta}, p.xi, cfg.n};
    if (user_tol) opt.tol = cfg.tol;
    const auto results = run_verification(opt);
    os << "{";
    for (std::size_t i = 0; i < results.size(); ++i) {
        const SuiteResult& r = results[i];
        os << (i ? "," : "") << "\"" << r.name << "\":{\"pass\":" << (r.status != SuiteStatus::Fail ? "true" : "false")
           << ",\"status\":\"" << to_string(r.status) << "\",\"max_residual\":" << num(r.max_residual)
           << ",\"threshold\":" << num(r.threshold) << ",\"cases\":" << r.cases << "}";
    }
    os << "}\n";
    return all_passed(results) ? kExitOk : kExitVerifyFailed;
}

int cmd_figure(const Config& cfg, std::ostream& os) {
    auto set = figure_set(cfg.figure);
    if (!set) throw CLI::ValidationError("figure", "unknown figure id '" + cfg.figure + "' (expected 1L, 1R, 3L, 3R)");
    if (cfg.sweep_count > 0) {
        set->poles = cfg.sweep_count;
        set->radius = cfg.sweep_radius;
    }
    const JacobiParams params(set->alpha, set->beta);
    std::vector<PolarSpec> specs;
    for (int n : set->degrees)
        for (int k = 0; k < set->poles; ++k) specs.push_back({params, sweep_pole(set->radius, k, set->poles), n});
    const std::vector<RootRecord> records = solve_sweep(specs, cfg.tol);

    const bool by_degree = set->degrees.size() > 1;
    std::vector<std::tuple<int, int, double, double>> rows;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const int k = static_cast<int>(i) % set->poles;
        const int n = specs[i].degree;
        for (const Complex& z : records[i].zeros.expanded()) rows.emplace_back(k, by_degree ? n : 0, z.real(), z.imag());
    }
    std::sort(rows.begin(), rows.end());
    os << (by_degree ? "k,n,re,im\n" : "k,re,im\n");
    for (const auto& [k, n, re, im] : rows) {
        os << k << ",";
        if (by_degree) os << n << ",";
        os << num(re) << "," << num(im) << "\n";
    }
    return kExitOk;
}

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

}  // namespace

std::optional<Complex> parse_complex(const std::string& text) {
    static const std::regex grammar(
        R"(([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)(?:([+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i)?)");
    std::smatch m;
    if (!std::regex_match(text, m, grammar)) return std::nullopt;
    const double re = std::stod(m[1].str());
    const double im = m[2].matched ? std::stod(m[2].str()) : 0.0;
    if (!std::isfinite(re) || !std::isfinite(im)) return std::nullopt;
    return Complex(re, im);
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polar Jacobi polynomials: coefficients, values, zeros and identity checks", "polar-jacobi"};
    app.require_subcommand(1);
    Config cfg;

    auto spec_options = [&](CLI::App* sub) {
        sub->add_option("--alpha", cfg.alpha, "Jacobi alpha, RE[+-IMi]");
        sub->add_option("--beta", cfg.beta, "Jacobi beta, RE[+-IMi]");
        sub->add_option("--xi", cfg.xi, "pole, RE[+-IMi]");
        sub->add_option("--n", cfg.n, "degree")->check(CLI::Range(0, kMaxDegree));
        sub->add_option("--out", cfg.out, "output file (default stdout)");
    };
    auto format_option = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(std::move(allowed)));
    };
    auto sweep_options = [&](CLI::App* sub) {
        sub->add_option("--sweep-count", cfg.sweep_count, "poles sweep_radius*exp(2 pi i k/count)")->check(CLI::Range(1, 100000));
        sub->add_option("--sweep-radius", cfg.sweep_radius, "radius of the pole sweep")->check(CLI::PositiveNumber);
    };

    CLI::App* coeffs = app.add_subcommand("coeffs", "coefficients by both constructions");
    spec_options(coeffs);
    format_option(coeffs, {"json"});
    CLI::App* evalc = app.add_subcommand("eval", "value of P_n at a point");
    spec_options(evalc);
    format_option(evalc, {"json"});
    evalc->add_option("--z", cfg.z, "evaluation point")->required();
    CLI::App* roots = app.add_subcommand("roots", "zeros with disk and level-curve checks");
    spec_options(roots);
    format_option(roots, {"json", "csv"});
    sweep_options(roots);
    roots->add_option("--tol", cfg.tol, "root finder tolerance")->check(CLI::PositiveNumber);
    CLI::App* verify = app.add_subcommand("verify", "run the identity and zero-location suites");
    spec_options(verify);
    format_option(verify, {"json"});
    CLI::Option* tol_opt = verify->add_option("--tol", cfg.tol, "replace every suite threshold")->check(CLI::PositiveNumber);
    CLI::App* figure = app.add_subcommand("figure", "zero data behind the paper figures, as CSV");
    figure->add_option("id", cfg.figure, "1L, 1R, 3L or 3R")->required();
    figure->add_option("--out", cfg.out, "output file (default stdout)");
    format_option(figure, {"csv"});
    sweep_options(figure);
    figure->add_option("--tol", cfg.tol, "root finder tolerance")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return kExitUsage;
    }

    std::ostringstream buffer;
    int code = kExitOk;
    try {
        const Parsed p{complex_arg(cfg.alpha, "alpha"), complex_arg(cfg.beta, "beta"), complex_arg(cfg.xi, "xi")};
        if (coeffs->parsed()) {
            cmd_coeffs(cfg, p, buffer);
        } else if (evalc->parsed()) {
            cmd_eval(cfg, p, buffer);
        } else if (roots->parsed()) {
            code = cmd_roots(cfg, p, buffer);
        } else if (verify->parsed()) {
            bool user_spec = false;
            for (const char* name : {"--alpha", "--beta", "--xi", "--n"}) user_spec = user_spec || verify->count(name) > 0;
            code = cmd_verify(cfg, p, user_spec, tol_opt->count() > 0, buffer);
        } else {
            code = cmd_figure(cfg, buffer);
        }
    } catch (const CLI::ParseError& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return kExitUsage;
    } catch (const DegenerateParams& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return kExitDegenerate;
    } catch (const NoConvergence& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return kExitNoConvergence;
    } catch (const Error& e) {
        err << "error: " << one_line(e.what()) << "\n";
        return kExitUsage;
    }

    if (cfg.out.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!(file << buffer.str())) {
            err << "error: cannot write " << cfg.out << "\n";
            return kExitUsage;
        }
    }
    return code;
}

}  // namespace pj
