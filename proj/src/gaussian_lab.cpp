#include "qdilog/gaussian_lab.hpp"

#include <cmath>

#include "qdilog/errors.hpp"

namespace qdilog {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

GaussianWave GaussianWave::unit(int nvars, double a) {
    GaussianWave w;
    w.width.assign(std::size_t(nvars), a);
    w.lin.assign(std::size_t(nvars), Complex(0.0, 0.0));
    return w;
}

Complex GaussianWave::amp() const { return std::exp(log_amp); }

Complex GaussianWave::value(const std::vector<Complex>& u) const {
    Complex expo = log_amp;
    for (std::size_t k = 0; k < width.size(); ++k)
        expo += -width[k] * u[k] * u[k] + lin[k] * u[k];
    return std::exp(expo);
}

GaussianWave GaussianWave::shifted(int k, Complex c) const {
    GaussianWave w = *this;
    const std::size_t i = std::size_t(k);
    w.log_amp += lin[i] * c - width[i] * c * c;
    w.lin[i] -= 2.0 * width[i] * c;
    return w;
}

GaussianWave GaussianWave::mul_exp(int k, Complex s) const {
    GaussianWave w = *this;
    w.lin[std::size_t(k)] += s;
    return w;
}

Complex WaveSum::value(const std::vector<Complex>& u) const {
    Complex v = 0.0;
    for (const auto& w : waves) v += w.value(u);
    return v;
}

GaussianWave apply_monomial(const WeylMonomial& m, const GaussianWave& f, const LabContext& ctx) {
    const double b = ctx.b;
    if (std::size_t(m.exp.nvars) != f.width.size())
        throw DimensionMismatch("apply_monomial: variable count mismatch");
    if (std::size_t(m.exp.npars) > ctx.lambdas.size())
        throw DimensionMismatch("apply_monomial: missing lambda values");

    GaussianWave w = f;
    Complex phase = 0.0;  // accumulated exponent of the scalar prefactor
    for (int k = 0; k < m.exp.nvars; ++k) {
        const double su = kPi * (b * m.exp.xi(k) + m.exp.xit(k) / b);
        const double sp = kPi * (b * m.exp.eta(k) + m.exp.etat(k) / b);
        phase += Complex(0.0, -su * sp / (4.0 * kPi));
        w = w.shifted(k, Complex(0.0, -sp / (2.0 * kPi)));
        w = w.mul_exp(k, su);
    }
    for (int j = 0; j < m.exp.npars; ++j)
        phase += kPi * (b * m.exp.nu(j) + m.exp.nut(j) / b) * ctx.lambdas[std::size_t(j)];
    w.log_amp += phase + std::log(m.coeff.evaluate(b));
    return w;
}

WaveSum apply_element(const OperatorElement& e, const GaussianWave& f, const LabContext& ctx) {
    WaveSum s;
    s.waves.reserve(e.monomial_count());
    for (const auto& [exp, coeff] : e.monomials())
        s.waves.push_back(apply_monomial(WeylMonomial{exp, coeff}, f, ctx));
    return s;
}

std::vector<std::vector<Complex>> default_grid(int nvars) {
    static const double axis[] = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
    std::vector<std::vector<Complex>> grid;
    std::vector<std::size_t> idx(std::size_t(nvars), 0);
    const std::size_t n = sizeof(axis) / sizeof(axis[0]);
    while (true) {
        std::vector<Complex> pt(static_cast<std::size_t>(nvars), Complex(0.0, 0.0));
        for (int k = 0; k < nvars; ++k) pt[std::size_t(k)] = axis[idx[std::size_t(k)]];
        grid.push_back(std::move(pt));
        int k = 0;
        for (; k < nvars; ++k) {
            if (++idx[std::size_t(k)] < n) break;
            idx[std::size_t(k)] = 0;
        }
        if (k == nvars) break;
    }
    return grid;
}

double wave_residual(const WaveSum& lhs, const WaveSum& rhs,
                     const std::vector<std::vector<Complex>>& grid) {
    double max_diff = 0.0, scale = 1e-300;
    for (const auto& pt : grid) {
        Complex l = lhs.value(pt), r = rhs.value(pt);
        max_diff = std::max(max_diff, std::abs(l - r));
        scale = std::max({scale, std::abs(l), std::abs(r)});
    }
    return max_diff / scale;
}

namespace {

WaveSum apply_sum(const OperatorElement& e, const WaveSum& s, const LabContext& ctx) {
    WaveSum out;
    for (const auto& w : s.waves) {
        WaveSum part = apply_element(e, w, ctx);
        out.waves.insert(out.waves.end(), part.waves.begin(), part.waves.end());
    }
    return out;
}

WaveSum scale_sum(WaveSum s, Complex c) {
    for (auto& w : s.waves) w.log_amp += std::log(c);
    return s;
}

struct ParsedRelation {
    std::string kind;
    int i = 1, j = 1;
};

ParsedRelation parse_relation(const std::string& name) {
    // names look like "K1_eps2_exchange", "eps1_phi1_commutator", ...
    ParsedRelation r;
    auto digit_after = [&](const std::string& tag) -> int {
        auto pos = name.find(tag);
        if (pos == std::string::npos || pos + tag.size() >= name.size()) return 0;
        char c = name[pos + tag.size()];
        return (c >= '0' && c <= '9') ? c - '0' : 0;
    };
    if (name.find("_commutator") != std::string::npos) {
        r.kind = "commutator";
        r.i = digit_after("eps");
        r.j = digit_after("phi");
    } else if (name.find("K") == 0 && name.find("_eps") != std::string::npos) {
        r.kind = name.find("wrong_power") != std::string::npos ? "K_eps_wrong" : "K_eps";
        r.i = digit_after("K");
        r.j = digit_after("eps");
    } else if (name.find("K") == 0 && name.find("_phi") != std::string::npos) {
        r.kind = "K_phi";
        r.i = digit_after("K");
        r.j = digit_after("phi");
    } else {
        throw InvalidParameter("numeric_relation_check: unsupported relation " + name);
    }
    if (r.i == 0 || r.j == 0)
        throw InvalidParameter("numeric_relation_check: bad indices in " + name);
    return r;
}

}  // namespace

double numeric_relation_check(const PositiveRep& rep, const std::string& relation, double b,
                              const std::vector<GaussianWave>& waves,
                              const std::vector<std::vector<Complex>>& grid,
                              const std::vector<double>& lambdas) {
    LabContext ctx{b, lambdas};
    ParsedRelation pr = parse_relation(relation);
    const Complex q = std::exp(Complex(0.0, kPi * b * b));
    const int aij = rep.cartan[std::size_t(pr.i - 1)][std::size_t(pr.j - 1)];

    double worst = 0.0;
    for (const auto& f : waves) {
        WaveSum lhs, rhs;
        WaveSum f0;
        f0.waves.push_back(f);
        if (pr.kind == "K_eps" || pr.kind == "K_eps_wrong") {
            const auto& K = rep.gen(GenType::K, pr.i);
            const auto& e = rep.gen(GenType::Eps, pr.j);
            lhs = apply_sum(K, apply_sum(e, f0, ctx), ctx);
            int power = pr.kind == "K_eps" ? aij : aij - 1;
            rhs = scale_sum(apply_sum(e, apply_sum(K, f0, ctx), ctx), std::pow(q, power));
        } else if (pr.kind == "K_phi") {
            const auto& K = rep.gen(GenType::K, pr.i);
            const auto& ph = rep.gen(GenType::Phi, pr.j);
            lhs = apply_sum(K, apply_sum(ph, f0, ctx), ctx);
            rhs = scale_sum(apply_sum(ph, apply_sum(K, f0, ctx), ctx), std::pow(q, -aij));
        } else {  // eps-phi commutator
            const auto& e = rep.gen(GenType::Eps, pr.i);
            const auto& ph = rep.gen(GenType::Phi, pr.j);
            WaveSum l1 = apply_sum(e, apply_sum(ph, f0, ctx), ctx);
            WaveSum l2 = scale_sum(apply_sum(ph, apply_sum(e, f0, ctx), ctx), -1.0);
            lhs = l1;
            lhs.waves.insert(lhs.waves.end(), l2.waves.begin(), l2.waves.end());
            if (pr.i == pr.j) {
                const auto& K = rep.gen(GenType::K, pr.i);
                WaveSum r1 = apply_sum(K.inverse_monomial(), f0, ctx);
                WaveSum r2 = scale_sum(apply_sum(K, f0, ctx), -1.0);
                rhs = r1;
                rhs.waves.insert(rhs.waves.end(), r2.waves.begin(), r2.waves.end());
                rhs = scale_sum(rhs, q - 1.0 / q);
            }
        }
        worst = std::max(worst, wave_residual(lhs, rhs, grid));
    }
    return worst;
}

WavepacketCoeff wavepacket_coeff(const ModularParameter& p, double lambda, Complex t,
                                 const QuadratureSpec& quad) {
    if (!(lambda > 0.0)) throw InvalidParameter("wavepacket_coeff: lambda must be positive");
    const Complex s(0.5 * p.Q(), -lambda);
    GbValue num = gb_eval(p, s + Complex(0.0, 1.0) * t, quad);
    GbValue den = gb_eval(p, s, quad);
    if (num.at_pole || den.at_pole || den.at_zero)
        throw PoleEvaluation("wavepacket_coeff: G_b argument on the lattice");
    Complex pref = std::exp(Complex(0.0, 0.5 * kPi) * (t - 2.0 * lambda) * t);
    WavepacketCoeff out{p.b(), lambda, t, pref * num.value / den.value, 0.0};
    auto rel = [](const GbValue& g) {
        return g.abs_error_estimate / std::max(std::abs(g.value), 1e-300);
    };
    out.abs_error_estimate = std::abs(out.value) * (rel(num) + rel(den));
    return out;
}

double wavepacket_fe_step_residual(const ModularParameter& p, double lambda, Complex t,
                                   const QuadratureSpec& quad) {
    const double b = p.b();
    const Complex q = p.q();
    Complex w_t = wavepacket_coeff(p, lambda, t, quad).value;
    Complex w_shift = wavepacket_coeff(p, lambda, t - Complex(0.0, b), quad).value;
    Complex factor = std::pow(q, -0.5) * std::exp(kPi * b * (t - lambda)) *
                     (1.0 + q * std::exp(2.0 * kPi * b * (lambda - t)));
    return std::abs(w_shift - w_t * factor) / std::max(std::abs(w_shift), 1e-300);
}

namespace {

// log of int e^{-A u^2 + B u} du (A > 0) with the wave's log-amplitude folded in
Complex pair_log(const GaussianWave& w, double test_width) {
    double a = w.width[0] + test_width;
    return w.log_amp + w.lin[0] * w.lin[0] / (4.0 * a) + 0.5 * (std::log(kPi) - std::log(a));
}

// ratio of two pairings computed through a common exponent shift, so that
// overall magnitudes like e^{a b^2} cancel instead of overflowing
Complex pair_ratio(const WaveSum& num, const WaveSum& den, double test_width) {
    double shift = -1e300;
    for (const auto& w : num.waves) shift = std::max(shift, pair_log(w, test_width).real());
    for (const auto& w : den.waves) shift = std::max(shift, pair_log(w, test_width).real());
    Complex n = 0.0, d = 0.0;
    for (const auto& w : num.waves) n += std::exp(pair_log(w, test_width) - shift);
    for (const auto& w : den.waves) d += std::exp(pair_log(w, test_width) - shift);
    return n / d;
}

}  // namespace

ContinuationCheck wavepacket_continuation_check(const ModularParameter& p, double lambda,
                                                const std::vector<double>& widths,
                                                const QuadratureSpec& quad) {
    const double b = p.b();
    const Complex q = p.q();
    const Complex t(0.0, -b);

    ContinuationCheck out{};
    out.quadrature = wavepacket_coeff(p, lambda, t, quad).value;
    out.algebraic = std::pow(q, -0.5) * std::exp(-kPi * b * lambda) *
                    (1.0 + q * std::exp(2.0 * kPi * b * lambda));
    out.residual_quad_vs_algebraic =
        std::abs(out.quadrature - out.algebraic) / std::abs(out.algebraic);

    // Symbolic route: eps acting on a narrow Gaussian, matrix element taken
    // against a fixed unit-width Gaussian functional; the delta limit is
    // approached as the width grows, with O(1/a) error.
    PositiveRep rep = build_sl2();
    const auto& eps = rep.gen(GenType::Eps, 1);
    LabContext ctx{b, {lambda}};

    std::vector<double> avals = widths;
    std::vector<Complex> m;
    for (double a : avals) {
        GaussianWave f = GaussianWave::unit(1, a);
        WaveSum lhs = apply_element(eps, f, ctx);
        // delta(x - t) side: f shifted by t
        WaveSum rhs;
        rhs.waves.push_back(f.shifted(0, -t));
        m.push_back(pair_ratio(lhs, rhs, 1.0));
    }
    // Neville extrapolation of the 1/a expansion to the delta limit
    std::vector<Complex> vals = m;
    const int nv = int(vals.size());
    for (int k = 1; k < nv; ++k)
        for (int i = nv - 1; i >= k; --i) {
            double ai = avals[std::size_t(i)], ak = avals[std::size_t(i - k)];
            vals[std::size_t(i)] =
                (ai * vals[std::size_t(i)] - ak * vals[std::size_t(i - 1)]) / (ai - ak);
        }
    out.gaussian_extrapolated = vals.back();
    out.residual_gaussian_vs_quad =
        std::abs(out.gaussian_extrapolated - out.quadrature) / std::abs(out.quadrature);
    return out;
}

std::vector<double> qbinom_operator_check(const ModularParameter& p, int n,
                                          const QuadratureSpec& quad) {
    if (n < 1 || n > 6) throw InvalidParameter("qbinom_operator_check: n must be in 1..6");
    const double b = p.b();

    OperatorElement U(1, 0), V(1, 0);
    {
        Exponents eu(1, 0), ev(1, 0);
        eu.xi(0) = 2;
        ev.eta(0) = 2;
        U.add_monomial(eu, PhaseCoefficient::one());
        V.add_monomial(ev, PhaseCoefficient::one());
    }
    OperatorElement sum = U + V;
    OperatorElement power = sum;
    for (int i = 1; i < n; ++i) power = power * sum;

    std::vector<double> residuals;
    for (int k = 0; k <= n; ++k) {
        Exponents key(1, 0);
        key.xi(0) = 2 * k;
        key.eta(0) = 2 * (n - k);
        auto it = power.monomials().find(key);
        if (it == power.monomials().end())
            throw Error("qbinom_operator_check: missing expansion monomial");
        // symmetric-exponential coefficient -> VU-ordered coefficient
        PhaseCoefficient c_vu = it->second * PhaseCoefficient::q_quarter_power(4 * k * (n - k));
        Complex exact = c_vu.evaluate(b);
        Complex continued = qbeta(p, double(n) * b, double(k) * b, quad).value;
        residuals.push_back(std::abs(exact - continued) / std::abs(continued));
    }
    return residuals;
}

}  // namespace qdilog
