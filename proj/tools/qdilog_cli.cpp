// Command-line front door: evaluate the special functions, run verification
// suites, and emit sweep tables.
//
// Exit codes: 0 success, 1 convergence/suite failure, 2 pole evaluation,
// 64 usage error.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qdilog/dilog.hpp"
#include "qdilog/gaussian_lab.hpp"
#include "qdilog/verify.hpp"

using namespace qdilog;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitPole = 2;
constexpr int kExitUsage = 64;

Complex parse_complex(const std::string& s) {
    // "re" or "re,im"
    auto comma = s.find(',');
    if (comma == std::string::npos) return Complex(std::stod(s), 0.0);
    return Complex(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

QuadratureSpec parse_quad(const std::string& s) {
    // "T,r,panels,eps"
    QuadratureSpec q;
    std::stringstream ss(s);
    std::string tok;
    std::vector<std::string> parts;
    while (std::getline(ss, tok, ',')) parts.push_back(tok);
    if (parts.size() != 4) throw CLI::ValidationError("--quad expects T,r,panels,eps");
    q.truncation = std::stod(parts[0]);
    q.indent_radius = std::stod(parts[1]);
    q.panel_count = std::stoi(parts[2]);
    q.target_abs_error = std::stod(parts[3]);
    return q;
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    f << content;
}

void print_value(const char* label, const GbValue& v) {
    std::printf("%s = %.15g %+.15gi  abs_err=%.3g  at_pole=%d  at_zero=%d\n", label,
                v.value.real(), v.value.imag(), v.abs_error_estimate, v.at_pole ? 1 : 0,
                v.at_zero ? 1 : 0);
}

struct EvalArgs {
    std::string function;
    double b = 0.7;
    bool allow_resonant = false;
    std::optional<std::string> z, t, tau;
    std::optional<double> x, lambda;
    std::string quad;
    std::string format = "text";
};

int run_eval(const EvalArgs& a) {
    ModularParameter p = ModularParameter::create(a.b, a.allow_resonant);
    QuadratureSpec quad = a.quad.empty() ? QuadratureSpec{} : parse_quad(a.quad);

    auto emit = [&](const GbValue& v, const char* label) {
        if (a.format == "json")
            std::cout << gb_value_json(v);
        else
            print_value(label, v);
        if (v.at_pole) return kExitPole;
        return kExitOk;
    };

    if (a.function == "zeta") {
        GbValue v;
        v.value = zeta_b(a.b);
        v.abs_error_estimate = 1e-16;
        return emit(v, "zeta_b");
    }
    if (a.function == "Gb") {
        if (!a.z) throw CLI::RequiredError("--z");
        return emit(gb_eval(p, parse_complex(*a.z), quad), "G_b(z)");
    }
    if (a.function == "gb") {
        if (!a.x) throw CLI::RequiredError("--x");
        return emit(little_gb(p, *a.x, quad), "g_b(x)");
    }
    if (a.function == "qbeta") {
        if (!a.t || !a.tau) throw CLI::RequiredError("--t/--tau");
        return emit(qbeta(p, parse_complex(*a.t), parse_complex(*a.tau), quad), "qbeta(t,tau)");
    }
    if (a.function == "wavepacket") {
        if (!a.lambda || !a.t) throw CLI::RequiredError("--lambda/--t");
        WavepacketCoeff w = wavepacket_coeff(p, *a.lambda, parse_complex(*a.t), quad);
        GbValue v;
        v.value = w.value;
        v.abs_error_estimate = w.abs_error_estimate;
        return emit(v, "wavepacket");
    }
    throw CLI::ValidationError("unknown function " + a.function);
}

struct TableArgs {
    std::string function;
    double b = 0.7;
    bool allow_resonant = false;
    double start = 0.0, stop = 0.0, step = 0.0;
    int points = 0;
    std::string spacing = "linear";
    std::optional<double> re;  // fixed real part for the Gb sweep
    std::string quad;
    std::string out;
};

int run_table(const TableArgs& a) {
    ModularParameter p = ModularParameter::create(a.b, a.allow_resonant);
    QuadratureSpec quad = a.quad.empty() ? QuadratureSpec{} : parse_quad(a.quad);

    std::vector<double> axis;
    if (a.spacing == "log") {
        int n = a.points > 0 ? a.points : 25;
        if (!(a.start > 0.0) || !(a.stop > a.start))
            throw CLI::ValidationError("log spacing requires 0 < start < stop");
        for (int i = 0; i < n; ++i)
            axis.push_back(a.start * std::pow(a.stop / a.start, double(i) / double(n - 1)));
    } else {
        if (!(a.step > 0.0) || a.stop < a.start)
            throw CLI::ValidationError("empty range: need start <= stop and step > 0");
        for (double v = a.start; v <= a.stop + 1e-12; v += a.step) axis.push_back(v);
    }
    if (axis.empty()) throw CLI::ValidationError("empty range");

    std::ostringstream os;
    os.precision(15);
    if (a.function == "Gb") {
        double re = a.re ? *a.re : 0.5 * p.Q();
        os << "re_z,im_z,re,im,abs_err\n";
        for (double x : axis) {
            GbValue v = gb_eval(p, Complex(re, x), quad);
            os << re << "," << x << "," << v.value.real() << "," << v.value.imag() << ","
               << v.abs_error_estimate << "\n";
        }
    } else if (a.function == "gb") {
        os << "x,re,im,abs_err\n";
        for (double x : axis) {
            GbValue v = little_gb(p, x, quad);
            os << x << "," << v.value.real() << "," << v.value.imag() << ","
               << v.abs_error_estimate << "\n";
        }
    } else if (a.function == "zeta") {
        os << "b,re,im,abs_err\n";
        for (double x : axis) {
            Complex v = zeta_b(x);
            os << x << "," << v.real() << "," << v.imag() << "," << 1e-16 << "\n";
        }
    } else {
        throw CLI::ValidationError("table supports Gb, gb, zeta");
    }
    write_out(a.out, os.str());
    return kExitOk;
}

struct VerifyArgs {
    std::string suite;
    SuiteConfig config;
    std::string out;
    std::vector<std::string> tol;
    std::string quad;
};

int run_verify(VerifyArgs a) {
    for (const auto& kv : a.tol) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--tol expects name=value");
        a.config.tol_overrides[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }
    if (!a.quad.empty()) a.config.quad = parse_quad(a.quad);

    SuiteReport report = run_suite(a.suite, a.config);
    std::string payload;
    if (a.config.format == "json")
        payload = report_json(report);
    else if (a.config.format == "csv")
        payload = report_csv(report);
    else
        payload = report_text(report);
    write_out(a.out, payload);
    if (!a.out.empty()) std::cout << report.summary_line() << "\n";
    return report.all_pass() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum dilogarithm and q-Weyl algebra verification toolkit"};
    app.require_subcommand(1);

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "evaluate a special function");
    eval->add_option("function", ea.function, "one of: Gb gb zeta qbeta wavepacket")
        ->required();
    eval->add_option("--b", ea.b, "deformation parameter b");
    eval->add_flag("--allow-resonant", ea.allow_resonant, "skip the b^2 rationality guard");
    std::string z_opt, t_opt, tau_opt;
    eval->add_option("--z", z_opt, "complex argument re,im");
    eval->add_option("--t", t_opt, "complex argument re,im");
    eval->add_option("--tau", tau_opt, "complex argument re,im");
    double x_opt = 0.0, lambda_opt = 0.0;
    auto* xo = eval->add_option("--x", x_opt, "positive real argument");
    auto* lo = eval->add_option("--lambda", lambda_opt, "weight parameter");
    eval->add_option("--quad", ea.quad, "quadrature spec T,r,panels,eps");
    eval->add_option("--format", ea.format, "text or json");

    TableArgs ta;
    auto* table = app.add_subcommand("table", "emit a CSV sweep of a function");
    table->add_option("function", ta.function, "one of: Gb gb zeta")->required();
    table->add_option("--b", ta.b, "deformation parameter b");
    table->add_flag("--allow-resonant", ta.allow_resonant, "skip the b^2 rationality guard");
    table->add_option("--start", ta.start)->required();
    table->add_option("--stop", ta.stop)->required();
    table->add_option("--step", ta.step);
    table->add_option("--points", ta.points, "sample count for log spacing");
    table->add_option("--spacing", ta.spacing, "linear or log");
    double re_opt = 0.0;
    auto* reo = table->add_option("--re", re_opt, "fixed Re z for the Gb sweep (default Q/2)");
    table->add_option("--quad", ta.quad, "quadrature spec T,r,panels,eps");
    table->add_option("--out", ta.out, "output path (default stdout)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", va.suite,
                       "one of: dilog qweyl sl2 sl3 duality crosscheck all")
        ->required();
    verify->add_option("--b", va.config.b, "deformation parameter b");
    verify->add_flag("--allow-resonant", va.config.allow_resonant_b,
                     "skip the b^2 rationality guard");
    verify->add_option("--seed", va.config.seed, "seed for randomized sweeps");
    verify->add_option("--format", va.config.format, "text, json, or csv");
    verify->add_option("--tol", va.tol, "tolerance override name=value")->take_all();
    verify->add_option("--quad", va.quad, "quadrature spec T,r,panels,eps");
    verify->add_option("--out", va.out, "report path (default stdout)");
    verify->add_option("--mutate", va.config.mutate,
                       "inject a defect: serre, kexchange, or coeff2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (eval->parsed()) {
            if (!z_opt.empty()) ea.z = z_opt;
            if (!t_opt.empty()) ea.t = t_opt;
            if (!tau_opt.empty()) ea.tau = tau_opt;
            if (*xo) ea.x = x_opt;
            if (*lo) ea.lambda = lambda_opt;
            return run_eval(ea);
        }
        if (table->parsed()) {
            if (*reo) ta.re = re_opt;
            return run_table(ta);
        }
        if (verify->parsed()) return run_verify(va);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const PoleEvaluation& e) {
        std::cerr << e.what() << "\n";
        return kExitPole;
    } catch (const NonConvergence& e) {
        std::cerr << e.what() << "\n";
        return kExitFailure;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
