#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qdilog/dilog.hpp"
#include "qdilog/gaussian_lab.hpp"
#include "qdilog/reps.hpp"
#include "qdilog/verify.hpp"

namespace py = pybind11;
using namespace qdilog;

namespace {

py::dict gb_to_dict(const GbValue& v) {
    py::dict d;
    d["re"] = v.value.real();
    d["im"] = v.value.imag();
    d["abs_err"] = v.abs_error_estimate;
    d["at_pole"] = v.at_pole;
    d["at_zero"] = v.at_zero;
    return d;
}

py::dict suite_to_dict(const SuiteReport& rep) {
    py::dict d;
    d["suite"] = rep.suite;
    d["summary"] = rep.summary_line();
    d["all_pass"] = rep.all_pass();
    py::list checks;
    for (const auto& c : rep.checks) {
        py::dict e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["residual"] = c.residual;
        e["tolerance"] = c.tolerance;
        checks.append(e);
    }
    d["checks"] = checks;
    return d;
}

}  // namespace

PYBIND11_MODULE(_qdilog, m) {
    m.doc() = "quantum dilogarithm evaluation and q-Weyl algebra verification";

    py::register_exception<PoleEvaluation>(m, "PoleEvaluation");
    py::register_exception<NonConvergence>(m, "NonConvergence");
    py::register_exception<UnresolvablePole>(m, "UnresolvablePole");
    py::register_exception<NotDivisible>(m, "NotDivisible");
    py::register_exception<InvalidParameter>(m, "InvalidParameter");

    m.def("zeta_b", &zeta_b, py::arg("b"),
          "zeta_b = e^{(i pi/2)((b^2 + b^{-2})/6 + 1/2)}");

    m.def(
        "gb",
        [](double b, std::complex<double> z, bool allow_resonant) {
            ModularParameter p = ModularParameter::create(b, allow_resonant);
            return gb_to_dict(gb_eval(p, z));
        },
        py::arg("b"), py::arg("z"), py::arg("allow_resonant") = false,
        "G_b(z) with pole/zero lattice flags and an error estimate");

    m.def(
        "little_gb",
        [](double b, double x, bool allow_resonant) {
            ModularParameter p = ModularParameter::create(b, allow_resonant);
            return gb_to_dict(little_gb(p, x));
        },
        py::arg("b"), py::arg("x"), py::arg("allow_resonant") = false,
        "unit-modulus variant g_b(x) for x > 0");

    m.def(
        "qbeta",
        [](double b, std::complex<double> t, std::complex<double> tau, bool allow_resonant) {
            ModularParameter p = ModularParameter::create(b, allow_resonant);
            return gb_to_dict(qbeta(p, t, tau));
        },
        py::arg("b"), py::arg("t"), py::arg("tau"), py::arg("allow_resonant") = false,
        "G_b(Q+t) / (G_b(Q+tau) G_b(Q+t-tau)) with lattice continuation");

    m.def(
        "ft_gb_check",
        [](double b, double x, bool allow_resonant) {
            ModularParameter p = ModularParameter::create(b, allow_resonant);
            FtCheckResult r = ft_gb_check(p, x);
            return py::make_tuple(r.lhs, r.rhs, r.residual);
        },
        py::arg("b"), py::arg("x"), py::arg("allow_resonant") = false,
        "(lhs, rhs, residual) of the Fourier-transform identity for g_b");

    m.def(
        "wavepacket_coeff",
        [](double b, double lam, std::complex<double> t) {
            ModularParameter p = ModularParameter::create(b);
            WavepacketCoeff w = wavepacket_coeff(p, lam, t);
            return py::make_tuple(w.value, w.abs_error_estimate);
        },
        py::arg("b"), py::arg("lambda_"), py::arg("t"),
        "coefficient of the eps^{i t / b} action on the delta state");

    m.def(
        "qbinom_check",
        [](double b, int n) {
            ModularParameter p = ModularParameter::create(b);
            return qbinom_operator_check(p, n);
        },
        py::arg("b"), py::arg("n"),
        "per-k deviation of the exact (V+U)^n coefficients from the continued q-beta");

    m.def(
        "verify",
        [](const std::string& suite, double b, std::uint64_t seed, const std::string& mutate,
           bool allow_resonant) {
            SuiteConfig cfg;
            cfg.b = b;
            cfg.seed = seed;
            cfg.mutate = mutate;
            cfg.allow_resonant_b = allow_resonant;
            return suite_to_dict(run_suite(suite, cfg));
        },
        py::arg("suite"), py::arg("b") = 0.7, py::arg("seed") = 1, py::arg("mutate") = "",
        py::arg("allow_resonant") = false,
        "run a verification suite (dilog, qweyl, sl2, sl3, duality, crosscheck, all)");

    m.attr("__version__") = "0.1.0";
}
