#include "qdilog/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace qdilog {

namespace {
constexpr double kPi = 3.14159265358979323846;

double tol_for(const SuiteConfig& cfg, const std::string& name, double fallback) {
    auto it = cfg.tol_overrides.find(name);
    return it != cfg.tol_overrides.end() ? it->second : fallback;
}

void add_check(SuiteReport& rep, const SuiteConfig& cfg, std::string name, double residual,
               double default_tol, std::string property) {
    CheckResult c;
    c.name = std::move(name);
    c.residual = residual;
    c.tolerance = tol_for(cfg, c.name, default_tol);
    c.pass = residual < c.tolerance;
    c.property = std::move(property);
    rep.checks.push_back(std::move(c));
}

// boolean check encoded as residual 0 / 1
void add_bool(SuiteReport& rep, const SuiteConfig& cfg, std::string name, bool ok,
              std::string property) {
    add_check(rep, cfg, std::move(name), ok ? 0.0 : 1.0, 0.5, std::move(property));
}

std::string preview(const OperatorElement& e, std::size_t limit = 160) {
    std::string s = e.str();
    std::replace(s.begin(), s.end(), '\n', ';');
    if (s.size() > limit) s = s.substr(0, limit) + "...";
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Rng: splitmix64, deterministic across platforms
// ---------------------------------------------------------------------------

std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double Rng::uniform(double lo, double hi) {
    double u = double(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

int Rng::uniform_int(int lo, int hi) {
    return lo + int(next() % std::uint64_t(hi - lo + 1));
}

// ---------------------------------------------------------------------------
// sweeps
// ---------------------------------------------------------------------------

namespace sweeps {

double functional_equation_max(const ModularParameter& p, int samples, bool inv_shift,
                               std::uint64_t seed, const QuadratureSpec& quad) {
    const double Q = p.Q();
    const double shift = inv_shift ? p.b_inv() : p.b();
    const double lo = 0.05 * Q + 0.03;
    const double hi = 0.95 * Q - shift - 0.03;
    if (hi <= lo) throw InvalidParameter("functional_equation_max: empty sampling window");
    // The residual is normalized by |G_b(z)| while the shifted side carries
    // the factor 1 - e^{2 pi i s z}, of magnitude up to e^{2 pi s |Im z|}.
    // Keep that magnitude below ~5e3 so the double-precision floor of the
    // two evaluations stays well under the 1e-8 tolerance.
    const double im_max = std::min(1.0, 8.5 / (2.0 * kPi * shift));
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        Complex z(rng.uniform(lo, hi), rng.uniform(-im_max, im_max));
        GbValue g0 = gb_strip(p, z, quad);
        GbValue g1 = gb_strip(p, z + shift, quad);
        Complex factor = 1.0 - std::exp(Complex(0.0, 2.0 * kPi * shift) * z);
        double res = std::abs(g1.value - factor * g0.value) / std::abs(g0.value);
        worst = std::max(worst, res);
    }
    return worst;
}

double reflection_max(const ModularParameter& p, int samples, std::uint64_t seed,
                      const QuadratureSpec& quad) {
    const double Q = p.Q();
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        Complex z(rng.uniform(0.1 * Q + 0.01, 0.9 * Q - 0.01), rng.uniform(-1.0, 1.0));
        GbValue g0 = gb_strip(p, z, quad);
        GbValue g1 = gb_strip(p, Q - z, quad);
        Complex target = std::exp(Complex(0.0, kPi) * z * (z - Q));
        worst = std::max(worst, std::abs(g0.value * g1.value - target) / std::abs(target));
    }
    return worst;
}

double conjugation_max(const ModularParameter& p, int samples, std::uint64_t seed,
                       const QuadratureSpec& quad) {
    const double Q = p.Q();
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        Complex z(rng.uniform(0.1 * Q + 0.01, 0.9 * Q - 0.01), rng.uniform(-1.0, 1.0));
        GbValue g0 = gb_strip(p, z, quad);
        GbValue g1 = gb_strip(p, Q - std::conj(z), quad);
        worst = std::max(worst, std::abs(std::conj(g0.value) * g1.value - 1.0));
    }
    return worst;
}

double critical_line_max(const ModularParameter& p, const QuadratureSpec& quad) {
    double worst = 0.0;
    for (int i = 0; i <= 24; ++i) {
        double x = -3.0 + 0.25 * i;
        GbValue g = gb_strip(p, Complex(0.5 * p.Q(), x), quad);
        worst = std::max(worst, std::fabs(std::abs(g.value) - 1.0));
    }
    return worst;
}

AsymptoticsResult asymptotics(const ModularParameter& p, bool upper, const QuadratureSpec& quad) {
    AsymptoticsResult r;
    const double Q = p.Q();
    auto dev = [&](double y, double& err) {
        Complex z(0.5 * Q, upper ? y : -y);
        GbValue g = gb_strip(p, z, quad);
        err = g.abs_error_estimate;
        Complex limit = upper ? std::conj(zeta_b(p.b()))
                              : zeta_b(p.b()) * std::exp(Complex(0.0, kPi) * z * (z - Q));
        return std::abs(g.value - limit);
    };
    r.dev5 = dev(5.0, r.err5);
    r.dev8 = dev(8.0, r.err8);
    r.dev12 = dev(12.0, r.err12);
    return r;
}

double error_honesty_violation_rate(const ModularParameter& p, int samples, std::uint64_t seed,
                                    const QuadratureSpec& quad) {
    const double Q = p.Q();
    Rng rng(seed);
    QuadratureSpec doubled = quad;
    doubled.panel_count = quad.panel_count * 2;
    int violations = 0;
    for (int i = 0; i < samples; ++i) {
        Complex z(rng.uniform(0.2 * Q, 0.8 * Q), rng.uniform(-1.5, 1.5));
        GbValue v1 = gb_strip(p, z, quad);
        GbValue v2 = gb_strip(p, z, doubled);
        if (std::abs(v2.value - v1.value) > v1.abs_error_estimate) ++violations;
    }
    return double(violations) / double(samples);
}

double wavepacket_unitarity_max(const ModularParameter& p, const std::vector<double>& lambdas,
                                const QuadratureSpec& quad) {
    double worst = 0.0;
    for (double lam : lambdas)
        for (int i = 0; i <= 24; ++i) {
            double t = -3.0 + 0.25 * i;
            WavepacketCoeff w = wavepacket_coeff(p, lam, Complex(t, 0.0), quad);
            worst = std::max(worst, std::fabs(std::abs(w.value) - 1.0));
        }
    return worst;
}

double monomial_pair_agreement_max(double b, int pairs, std::uint64_t seed) {
    Rng rng(seed);
    const int nvars = 2, npars = 1;
    LabContext ctx{b, {0.4}};
    const std::vector<std::vector<Complex>> grid = {
        {Complex(-0.7, 0), Complex(-0.7, 0)},
        {Complex(0.3, 0), Complex(0.3, 0)},
        {Complex(1.1, 0), Complex(1.1, 0)},
    };
    auto random_mono = [&]() {
        Exponents e(nvars, npars);
        for (auto& x : e.v) x = rng.uniform_int(-3, 3);
        PhaseCoefficient c = PhaseCoefficient::unit(rng.uniform_int(-4, 4), rng.uniform_int(-4, 4),
                                                    rng.uniform_int(0, 7));
        return WeylMonomial{e, c};
    };
    double worst = 0.0;
    for (int i = 0; i < pairs; ++i) {
        WeylMonomial m1 = random_mono();
        WeylMonomial m2 = random_mono();
        WeylMonomial m12 = mono_mul(m1, m2);
        for (double a : {1.0, 2.0}) {
            GaussianWave f = GaussianWave::unit(nvars, a);
            GaussianWave via_product = apply_monomial(m12, f, ctx);
            GaussianWave sequential = apply_monomial(m1, apply_monomial(m2, f, ctx), ctx);
            for (const auto& pt : grid) {
                Complex v1 = via_product.value(pt);
                Complex v2 = sequential.value(pt);
                worst = std::max(worst, std::abs(v1 - v2) / std::max(std::abs(v1), 1e-300));
            }
        }
    }
    return worst;
}

}  // namespace sweeps

// ---------------------------------------------------------------------------
// individual suites
// ---------------------------------------------------------------------------

namespace {

QuadratureSpec strict_quad(const QuadratureSpec& q) {
    QuadratureSpec s = q;
    s.truncation = std::max(q.truncation, 100.0);
    s.target_abs_error = std::min(q.target_abs_error, 1e-10);
    return s;
}

void dilog_suite(SuiteReport& rep, const SuiteConfig& cfg) {
    ModularParameter p = ModularParameter::create(cfg.b, cfg.allow_resonant_b);
    const double Q = p.Q();
    QuadratureSpec quad = strict_quad(cfg.quad);

    add_check(rep, cfg, "dilog.fe_b_shift",
              sweeps::functional_equation_max(p, 100, false, cfg.seed, quad), 1e-8,
              "G_b(z+b) = (1 - e^{2 pi i b z}) G_b(z)");
    add_check(rep, cfg, "dilog.fe_binv_shift",
              sweeps::functional_equation_max(p, 100, true, cfg.seed + 1, quad), 1e-8,
              "G_b(z+1/b) = (1 - e^{2 pi i z / b}) G_b(z)");
    add_check(rep, cfg, "dilog.reflection", sweeps::reflection_max(p, 50, cfg.seed + 2, quad),
              1e-8, "G_b(z) G_b(Q-z) = e^{pi i z (z-Q)}");
    add_check(rep, cfg, "dilog.conjugation", sweeps::conjugation_max(p, 50, cfg.seed + 3, quad),
              1e-8, "conj(G_b(z)) = 1 / G_b(Q - conj z)");
    add_check(rep, cfg, "dilog.critical_line_unitarity", sweeps::critical_line_max(p, quad), 1e-9,
              "|G_b(Q/2 + i x)| = 1");

    {
        auto up = sweeps::asymptotics(p, true, quad);
        add_check(rep, cfg, "dilog.asymptotics_upper_value", up.dev12, 1e-4,
                  "G_b -> conj(zeta_b) as Im z -> +inf");
        add_bool(rep, cfg, "dilog.asymptotics_upper_monotone", up.monotone(1e-15),
                 "|G_b - conj(zeta_b)| decreasing in Im z (within error bars)");
        auto lo = sweeps::asymptotics(p, false, quad);
        add_check(rep, cfg, "dilog.asymptotics_lower_value", lo.dev12, 1e-4,
                  "G_b -> zeta_b e^{pi i z(z-Q)} as Im z -> -inf");
        add_bool(rep, cfg, "dilog.asymptotics_lower_monotone", lo.monotone(1e-15),
                 "lower asymptotic deviation decreasing (within error bars)");
    }

    add_check(rep, cfg, "dilog.error_honesty",
              sweeps::error_honesty_violation_rate(p, 100, cfg.seed + 4, quad), 0.05 + 1e-9,
              "abs_error_estimate bounds panel-doubling drift on >= 95% of samples");

    {
        Complex z = zeta_b(p.b());
        add_check(rep, cfg, "dilog.zeta_unit_modulus", std::fabs(std::abs(z) - 1.0), 1e-14,
                  "|zeta_b| = 1");
        long double b2 = (long double)(p.b()) * p.b();
        long double ang = 0.5L * 3.141592653589793238462643383279502884L *
                          ((b2 + 1.0L / b2) / 6.0L + 0.5L);
        Complex ref((double)std::cos(ang), (double)std::sin(ang));
        add_check(rep, cfg, "dilog.zeta_high_precision", std::abs(z - ref), 1e-14,
                  "zeta_b = e^{(i pi/2)((b^2 + b^{-2})/6 + 1/2)}");
    }

    {
        GbValue g = gb_strip(p, Complex(0.5 * Q, 0.0), quad);
        Complex target = std::exp(Complex(0.0, -kPi * Q * Q / 4.0));
        add_check(rep, cfg, "dilog.reflection_fixed_point", std::abs(g.value * g.value - target),
                  1e-8, "G_b(Q/2)^2 = e^{-pi i Q^2/4}");
    }

    {
        GbValue origin = gb_eval(p, Complex(0.0, 0.0), quad);
        add_bool(rep, cfg, "dilog.gb_pole_flag_origin", origin.at_pole, "pole lattice at z = 0");
        Complex z(0.4 * Q, 0.2);
        GbValue a = gb_eval(p, z, quad), b = gb_strip(p, z, quad);
        add_check(rep, cfg, "dilog.in_strip_identity", std::abs(a.value - b.value), 1e-14,
                  "gb_eval = gb_strip inside the safe strip");
    }

    {
        GbValue g = little_gb(p, 1.7, quad);
        add_check(rep, cfg, "dilog.little_gb_unitarity_x1p7", std::fabs(std::abs(g.value) - 1.0),
                  1e-9, "|g_b(x)| = 1 for x > 0");
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            double x = 0.1 * std::pow(50.0, i / 19.0);
            worst = std::max(worst,
                             std::fabs(std::abs(little_gb(p, x, quad).value) - 1.0));
        }
        add_check(rep, cfg, "dilog.little_gb_unitarity_sweep", worst, 1e-9,
                  "|g_b(x)| = 1 on log-spaced x in [0.1, 5]");
        add_check(rep, cfg, "dilog.little_gb_small_x_limit",
                  std::abs(little_gb(p, 1e-6, quad).value - 1.0), 1e-3, "g_b(0+) = 1");
        GbValue lhs = little_gb(p, 1.7, quad, false);
        GbValue rhs = little_gb(p, std::pow(1.7, 1.0 / (p.b() * p.b())), quad, true);
        add_check(rep, cfg, "dilog.little_gb_selfdual", std::abs(lhs.value - rhs.value), 1e-10,
                  "g_b(x) = g_{1/b}(x^{1/b^2})");
    }

    {
        Complex t(0.2, 0.1), tau(0.05, 0.0);
        GbValue q1 = qbeta(p, t, tau, quad);
        GbValue q2 = qbeta(p, t, t - tau, quad);
        add_check(rep, cfg, "dilog.qbeta_symmetry",
                  std::abs(q1.value - q2.value) / std::abs(q1.value), 1e-8,
                  "qbeta(t, tau) = qbeta(t, t - tau)");
        GbValue d1 = gb_eval(p, Q + t, quad);
        GbValue d2 = gb_eval(p, Q + tau, quad);
        GbValue d3 = gb_eval(p, Q + t - tau, quad);
        Complex direct = d1.value / (d2.value * d3.value);
        add_check(rep, cfg, "dilog.qbeta_definition",
                  std::abs(q1.value - direct) / std::abs(direct), 1e-8,
                  "qbeta = G_b(Q+t) / (G_b(Q+tau) G_b(Q+t-tau))");
        Complex q2b = p.q() * p.q();
        Complex cont = qbeta(p, 2.0 * p.b(), p.b(), quad).value;
        add_check(rep, cfg, "dilog.qbeta_integer_continuation_n2k1",
                  std::abs(cont - (1.0 + q2b)) / std::abs(1.0 + q2b), 1e-10,
                  "integer continuation equals Gauss binomial (1 + q^2)");
    }

    {
        double worst = 0.0;
        for (double x : {0.5, 1.0, 2.0})
            worst = std::max(worst, ft_gb_check(p, x, quad).residual);
        add_check(rep, cfg, "dilog.ft_lemma", worst, 1e-6,
                  "int e^{-pi i t^2}/G_b(Q+it) x^{it/b} dt = g_b(x)");
        FtCheckResult f1 = ft_gb_check(p, 1.0, quad);
        GbValue gq = gb_eval(p, Complex(0.5 * Q, 0.0), quad);
        Complex expect = std::conj(zeta_b(p.b())) / gq.value;
        add_check(rep, cfg, "dilog.ft_x1_value", std::abs(f1.lhs - expect) / std::abs(expect),
                  1e-6, "transform at x = 1 equals conj(zeta_b)/G_b(Q/2)");
        FtCheckResult fs = ft_gb_check(p, 1e-4, quad);
        add_check(rep, cfg, "dilog.ft_small_x_limit", std::abs(fs.lhs - 1.0), 1e-3,
                  "transform tends to 1 as x -> 0+");
    }
}

OperatorElement first_monomial_element(const OperatorElement& e) {
    OperatorElement out(e.nvars(), e.npars());
    const auto& [exp, coeff] = *e.monomials().begin();
    out.add_monomial(exp, coeff);
    return out;
}

void qweyl_suite(SuiteReport& rep, const SuiteConfig& cfg) {
    Rng rng(cfg.seed);
    const int nvars = 2, npars = 1;
    auto random_mono = [&]() {
        Exponents e(nvars, npars);
        for (auto& x : e.v) x = rng.uniform_int(-4, 4);
        return WeylMonomial{e, PhaseCoefficient::unit(rng.uniform_int(-4, 4),
                                                      rng.uniform_int(-4, 4),
                                                      rng.uniform_int(0, 7))};
    };

    {
        int fails = 0;
        for (int i = 0; i < 500; ++i) {
            WeylMonomial m1 = random_mono(), m2 = random_mono(), m3 = random_mono();
            WeylMonomial l = mono_mul(mono_mul(m1, m2), m3);
            WeylMonomial r = mono_mul(m1, mono_mul(m2, m3));
            if (!(l.exp == r.exp && l.coeff == r.coeff)) ++fails;
        }
        add_check(rep, cfg, "qweyl.associativity", double(fails), 0.5,
                  "(m1 m2) m3 = m1 (m2 m3) exactly, 500 random triples");
    }
    {
        int fails = 0;
        for (int i = 0; i < 200; ++i) {
            WeylMonomial m1 = random_mono(), m2 = random_mono();
            SymplecticPairing s = symplectic(m1.exp, m2.exp);
            WeylMonomial l = mono_mul(m1, m2), r = mono_mul(m2, m1);
            PhaseCoefficient exch =
                PhaseCoefficient::unit(int(2 * s.bb), int(2 * s.tt), 2 * s.cross);
            if (!(l.exp == r.exp && l.coeff == r.coeff * exch)) ++fails;
        }
        add_check(rep, cfg, "qweyl.phase_antisymmetry", double(fails), 0.5,
                  "m1 m2 and m2 m1 differ by the exchange phase (2s_bb, 2s_tt; zeta_8^{2s_x})");
    }
    {
        OperatorElement e(nvars, npars);
        for (int i = 0; i < 6; ++i) {
            WeylMonomial m = random_mono();
            e.add_monomial(m.exp, m.coeff);
        }
        OperatorElement rebuilt(nvars, npars);
        for (const auto& [exp, c] : e.monomials()) rebuilt.add_monomial(exp, c);
        add_bool(rep, cfg, "qweyl.canonical_idempotence", rebuilt == e,
                 "re-canonicalizing a canonical element is the identity");
    }
    {
        WeylMonomial m = random_mono();
        OperatorElement e = OperatorElement::monomial(m);
        add_bool(rep, cfg, "qweyl.commutator_self_zero", commutator(e, e).is_zero(),
                 "[m, m] = 0");
    }
    {
        // disjoint variables commute with zero phase increment
        Exponents e1(nvars, npars), e2(nvars, npars);
        e1.xi(0) = 3;
        e1.eta(0) = -2;
        e2.xi(1) = 1;
        e2.eta(1) = 4;
        SymplecticPairing s = symplectic(e1, e2);
        add_bool(rep, cfg, "qweyl.disjoint_variables",
                 s.bb == 0 && s.tt == 0 && s.cross == 0,
                 "monomials on disjoint variables exchange trivially");
    }
    {
        WeylMonomial m = random_mono();
        WeylMonomial id{Exponents(nvars, npars), PhaseCoefficient::one()};
        WeylMonomial prod = mono_mul(id, m);
        add_bool(rep, cfg, "qweyl.identity_monomial", prod.exp == m.exp && prod.coeff == m.coeff,
                 "identity monomial is a left unit");
    }
    {
        // K = e^{pi b (-2u)}, A = e^{pi b (-u + lambda - 2p)}:
        // K A = q * combined, A K = q^{-1} * combined, so K A = q^2 A K
        Exponents K(1, 1), A(1, 1);
        K.xi(0) = -2;
        A.xi(0) = -1;
        A.eta(0) = -2;
        A.nu(0) = 1;
        WeylMonomial ka = mono_mul({K, PhaseCoefficient::one()}, {A, PhaseCoefficient::one()});
        WeylMonomial ak = mono_mul({A, PhaseCoefficient::one()}, {K, PhaseCoefficient::one()});
        Exponents comb(1, 1);
        comb.xi(0) = -3;
        comb.eta(0) = -2;
        comb.nu(0) = 1;
        bool ok = ka.exp == comb && ka.coeff == PhaseCoefficient::q_quarter_power(4) &&
                  ak.coeff == PhaseCoefficient::q_quarter_power(-4);
        add_bool(rep, cfg, "qweyl.bch_k_times_a", ok,
                 "K * A  picks up phase q (grading a = +4); reversed order q^{-1}");
    }
    {
        // (V + U)^2 = V^2 + U^2 + (q + q^{-1}) W with W the symmetric
        // combination, i.e. (q^2 + 1) in VU-order
        OperatorElement U(1, 0), V(1, 0);
        Exponents eu(1, 0), ev(1, 0);
        eu.xi(0) = 2;
        ev.eta(0) = 2;
        U.add_monomial(eu, PhaseCoefficient::one());
        V.add_monomial(ev, PhaseCoefficient::one());
        OperatorElement sq = (U + V) * (U + V);
        OperatorElement expect(1, 0);
        Exponents u2(1, 0), v2(1, 0), w(1, 0);
        u2.xi(0) = 4;
        v2.eta(0) = 4;
        w.xi(0) = 2;
        w.eta(0) = 2;
        expect.add_monomial(u2, PhaseCoefficient::one());
        expect.add_monomial(v2, PhaseCoefficient::one());
        expect.add_monomial(w, PhaseCoefficient::q_quarter_power(4) +
                                   PhaseCoefficient::q_quarter_power(-4));
        add_bool(rep, cfg, "qweyl.vu_binomial_square", sq == expect,
                 "(V+U)^2 = V^2 + (q + q^{-1}) W_sym + U^2 for U V = q^2 V U");
    }
    {
        int fails = 0;
        for (int i = 0; i < 100; ++i) {
            OperatorElement e(nvars, npars);
            int nm = rng.uniform_int(1, 4);
            for (int j = 0; j < nm; ++j) {
                WeylMonomial m = random_mono();
                e.add_monomial(m.exp, m.coeff);
            }
            if (e.is_zero()) continue;
            int s = rng.uniform_int(1, 3);
            PhaseCoefficient div;
            switch (rng.uniform_int(0, 2)) {
                case 0:
                    div = PhaseCoefficient::q_quarter_power(4 * s) -
                          PhaseCoefficient::q_quarter_power(-4 * s);
                    break;
                case 1:
                    div = PhaseCoefficient::qt_quarter_power(4 * s) -
                          PhaseCoefficient::qt_quarter_power(-4 * s);
                    break;
                default:
                    div = PhaseCoefficient::unit(rng.uniform_int(-4, 4), rng.uniform_int(-4, 4),
                                                 rng.uniform_int(0, 7));
                    break;
            }
            OperatorElement prod = div * e;
            if (!(prod.divide_exact(div) == e)) ++fails;
        }
        add_check(rep, cfg, "qweyl.divide_round_trip", double(fails), 0.5,
                  "divide_exact(e * d, d) = e for 100 random (e, d)");
    }
    {
        WeylMonomial m = random_mono();
        OperatorElement e = OperatorElement::monomial(m);
        add_bool(rep, cfg, "qweyl.divide_by_one", e.divide_exact(PhaseCoefficient::one()) == e,
                 "divide_exact(e, 1) = e");
        PhaseCoefficient qmqi =
            PhaseCoefficient::q_quarter_power(4) - PhaseCoefficient::q_quarter_power(-4);
        add_bool(rep, cfg, "qweyl.divide_constructed", (qmqi * e).divide_exact(qmqi) == e,
                 "divide_exact((q - q^{-1}) m, q - q^{-1}) = m");
        bool threw = false;
        try {
            (void)e.divide_exact(qmqi);
        } catch (const NotDivisible&) {
            threw = true;
        }
        add_bool(rep, cfg, "qweyl.divide_rejects_nondivisible", threw,
                 "unit coefficient is not divisible by q - q^{-1}");
    }
    {
        WeylMonomial m = random_mono();
        OperatorElement e = OperatorElement::monomial(m);
        add_bool(rep, cfg, "qweyl.dual_involution",
                 e.substitute_dual().substitute_dual() == e, "dual of dual is the identity");
        PhaseCoefficient qph = PhaseCoefficient::unit(2, 0, 0);
        add_bool(rep, cfg, "qweyl.dual_grading_swap",
                 qph.dual() == PhaseCoefficient::unit(0, 2, 0),
                 "grading (a, c) -> (c, a) under the dual map");
    }
    {
        // two products whose raw eighth-root gradings differ by 8 must
        // cancel structurally
        Exponents e1(1, 0), e2(1, 0);
        e1.xi(0) = 1;
        e2.etat(0) = 4;  // sigma_cross = 4
        OperatorElement a = OperatorElement::monomial({e1, PhaseCoefficient::one()});
        OperatorElement b = OperatorElement::monomial({e2, PhaseCoefficient::one()});
        add_bool(rep, cfg, "qweyl.exact_zero_cancellation", commutator(a, b).is_zero(),
                 "opposite-order eighth-root phases merge to an exact zero");
    }
}

void relation_checks(SuiteReport& rep, const SuiteConfig& cfg, const std::string& prefix,
                     const PositiveRep& rep_in) {
    PositiveRep r = rep_in;
    if (cfg.mutate == "coeff2") {
        // double one monomial of eps1: relations must fail
        auto& eps = r.gens[{GenType::Eps, 1}];
        eps = eps + first_monomial_element(eps);
    }
    RelationReport report = check_defining_relations(r);

    if (cfg.mutate == "serre" && r.rank >= 2) {
        // wrong middle coefficient in one Serre relation
        const auto& e1 = r.gen(GenType::Eps, 1);
        const auto& e2 = r.gen(GenType::Eps, 2);
        PhaseCoefficient wrong = PhaseCoefficient::q_quarter_power(4) +
                                 PhaseCoefficient::q_quarter_power(-4) +
                                 PhaseCoefficient::one();
        report.add("serre_eps_12_mutated", e1 * e1 * e2 - wrong * (e1 * e2 * e1) + e2 * e1 * e1);
    }
    if (cfg.mutate == "kexchange") {
        const auto& K = r.gen(GenType::K, 1);
        const auto& e1 = r.gen(GenType::Eps, 1);
        // q^{a_11 - 1} instead of q^{a_11}
        PhaseCoefficient wrongq = r.dual_units ? PhaseCoefficient::qt_quarter_power(4)
                                               : PhaseCoefficient::q_quarter_power(4);
        report.add("K1_eps1_exchange_mutated", K * e1 - wrongq * (e1 * K));
    }

    for (const auto& entry : report.entries) {
        add_check(rep, cfg, prefix + ".rel." + entry.name,
                  double(entry.difference.monomial_count()), 0.5,
                  "left minus right reduces to the zero element");
        RelationSummary rs;
        rs.relation = entry.name;
        rs.pass = entry.pass;
        rs.residual_monomial_count = int(entry.difference.monomial_count());
        rs.residual_preview = entry.pass ? "" : preview(entry.difference);
        rep.relations.push_back(std::move(rs));
    }

    // lambda-centrality: every generator commutes with a pure lambda monomial
    {
        Exponents lam(r.nvars, r.npars);
        lam.nu(0) = 1;
        OperatorElement lam_el(r.nvars, r.npars);
        lam_el.add_monomial(lam, PhaseCoefficient::one());
        bool ok = true;
        for (const auto& [id, g] : r.gens) {
            (void)id;
            ok = ok && commutator(g, lam_el).is_zero();
        }
        add_bool(rep, cfg, prefix + ".lambda_centrality", ok,
                 "lambda exponents are central");
    }
}

void serre_homogeneity_check(SuiteReport& rep, const SuiteConfig& cfg, const std::string& prefix,
                             const PositiveRep& r) {
    bool ok = true;
    for (int i = 1; i <= r.rank && ok; ++i)
        for (int j = 1; j <= r.rank && ok; ++j) {
            if (i == j || r.cartan[std::size_t(i - 1)][std::size_t(j - 1)] != -1) continue;
            for (GenType t : {GenType::Eps, GenType::Phi}) {
                const auto& gi = r.gen(t, i);
                const auto& gj = r.gen(t, j);
                long want = 2 * eta_degree(gi.monomials().begin()->first) +
                            eta_degree(gj.monomials().begin()->first);
                PhaseCoefficient qpqi = r.dual_units
                                            ? PhaseCoefficient::qt_quarter_power(4) +
                                                  PhaseCoefficient::qt_quarter_power(-4)
                                            : PhaseCoefficient::q_quarter_power(4) +
                                                  PhaseCoefficient::q_quarter_power(-4);
                for (const OperatorElement& term :
                     {gi * gi * gj, qpqi * (gi * gj * gi), gj * (gi * gi)}) {
                    for (const auto& [e, c] : term.monomials()) {
                        (void)c;
                        if (eta_degree(e) != want) ok = false;
                    }
                }
            }
        }
    add_bool(rep, cfg, prefix + ".serre_homogeneity", ok,
             "Serre summands are homogeneous in total momentum degree");
}

void sl2_suite(SuiteReport& rep, const SuiteConfig& cfg) {
    PositiveRep r = build_sl2();
    relation_checks(rep, cfg, "sl2", r);

    // frozen generator shape
    {
        const auto& eps = r.gen(GenType::Eps, 1);
        Exponents m1(1, 1), m2(1, 1);
        m1.xi(0) = -1;
        m1.eta(0) = -2;
        m1.nu(0) = 1;
        m2.xi(0) = 1;
        m2.eta(0) = -2;
        m2.nu(0) = -1;
        bool ok = eps.monomial_count() == 2 && eps.monomials().count(m1) == 1 &&
                  eps.monomials().count(m2) == 1 &&
                  eps.monomials().at(m1) == PhaseCoefficient::one();
        add_bool(rep, cfg, "sl2.eps_exponents", ok,
                 "eps = e^{pi b(-u + lambda - 2p)} + e^{pi b(u - lambda - 2p)}");
        const auto& K = r.gen(GenType::K, 1);
        Exponents ke(1, 1);
        ke.xi(0) = -2;
        add_bool(rep, cfg, "sl2.K_exponent", K.monomial_count() == 1 &&
                                                 K.monomials().count(ke) == 1,
                 "K = e^{-2 pi b u}");
    }
    {
        OperatorElement t = lusztig_T(r, 1, 1);
        bool units = true;
        for (const auto& [e, c] : t.monomials()) {
            (void)e;
            units = units && c.is_unit_phase();
        }
        add_bool(rep, cfg, "sl2.lusztig_T_eps", t.monomial_count() == 2 && units,
                 "T(eps) = q phi K^{-1} is an explicit two-monomial element");
    }
}

void sl3_suite(SuiteReport& rep, const SuiteConfig& cfg) {
    PositiveRep r = build_sl3();
    relation_checks(rep, cfg, "sl3", r);
    serre_homogeneity_check(rep, cfg, "sl3", r);

    {
        const auto& eps2 = r.gen(GenType::Eps, 2);
        Exponents m1(3, 2), m2(3, 2);
        m1.xi(2) = -1;
        m1.eta(2) = -2;
        m2.xi(2) = 1;
        m2.eta(2) = -2;
        add_bool(rep, cfg, "sl3.eps2_exponents",
                 eps2.monomial_count() == 2 && eps2.monomials().count(m1) == 1 &&
                     eps2.monomials().count(m2) == 1,
                 "eps2 = [w] e(-p_w)");
        const auto& K1 = r.gen(GenType::K, 1);
        Exponents k1(3, 2);
        k1.xi(0) = 1;
        k1.xi(1) = -2;
        k1.xi(2) = 1;
        k1.nu(0) = -2;
        add_bool(rep, cfg, "sl3.K1_exponent",
                 K1.monomial_count() == 1 && K1.monomials().count(k1) == 1,
                 "K1 = e^{-pi b(-u + 2v - w + 2 lambda_1)}");
        const auto& phi1 = r.gen(GenType::Phi, 1);
        bool nu_ok = phi1.monomial_count() == 2;
        for (const auto& [e, c] : phi1.monomials()) {
            (void)c;
            nu_ok = nu_ok && (e.nu(0) == 2 || e.nu(0) == -2) && e.nu(1) == 0;
        }
        add_bool(rep, cfg, "sl3.phi1_lambda_exponents", nu_ok,
                 "phi1 bracket carries lambda_1 exponents +-2 only");
    }
    {
        OperatorElement e12 = lusztig_T(r, 1, 2);
        bool units = !e12.is_zero();
        for (const auto& [e, c] : e12.monomials()) {
            (void)e;
            units = units && c.is_unit_phase();
        }
        add_bool(rep, cfg, "sl3.lusztig_eps12_unit_phases", units,
                 "eps_12 = (q^{1/2} eps2 eps1 - q^{-1/2} eps1 eps2)/(q - q^{-1}) has unit-phase "
                 "coefficients");
    }
}

void duality_suite(SuiteReport& rep, const SuiteConfig& cfg) {
    for (const char* which : {"sl2", "sl3"}) {
        PositiveRep r = std::string(which) == "sl2" ? build_sl2() : build_sl3();
        PositiveRep d = dual_rep(r);
        RelationReport report = check_defining_relations(d);
        add_bool(rep, cfg, std::string("duality.") + which + "_dual_relations", report.all_pass,
                 "dual build satisfies the defining relations with q~");
        for (const auto& entry : report.entries) {
            RelationSummary rs;
            rs.relation = std::string(which) + "_dual_" + entry.name;
            rs.pass = entry.pass;
            rs.residual_monomial_count = int(entry.difference.monomial_count());
            rs.residual_preview = entry.pass ? "" : preview(entry.difference);
            rep.relations.push_back(std::move(rs));
        }

        bool invol = true;
        for (const auto& [id, g] : r.gens)
            invol = invol && dual_rep(d).gen(id.type, id.index) == g;
        add_bool(rep, cfg, std::string("duality.") + which + "_involution", invol,
                 "dual of the dual build is the original");

        CrossCommutationReport cc = cross_commutation_check(r, d);
        add_bool(rep, cfg, std::string("duality.") + which + "_cross_commutation", cc.all_pass,
                 "every (b, b^{-1}) generator monomial pair exchanges with phase +-1");
        bool saw_minus = false;
        for (const auto& e : cc.entries) saw_minus = saw_minus || e.exchange_phase == "-1";
        if (std::string(which) == "sl3")
            add_bool(rep, cfg, "duality.sl3_cross_commutation_sign_occurs", saw_minus,
                     "the -1 exchange phase genuinely occurs in the rank-2 build");
    }
    {
        PositiveRep r = build_sl3();
        OperatorElement lhs = lusztig_T(r, 1, 2).substitute_dual();
        OperatorElement rhs = lusztig_T(dual_rep(r), 1, 2);
        add_bool(rep, cfg, "duality.lusztig_eps12_dual_match", lhs == rhs,
                 "dual of eps_12 equals the q~-built eps~_12");
    }
}

void crosscheck_suite(SuiteReport& rep, const SuiteConfig& cfg) {
    ModularParameter p = ModularParameter::create(cfg.b, cfg.allow_resonant_b);
    QuadratureSpec quad = strict_quad(cfg.quad);
    PositiveRep r = build_sl2();
    const std::vector<double> lambdas = {0.5};
    auto grid = default_grid(1);
    std::vector<GaussianWave> waves = {GaussianWave::unit(1, 1.0), GaussianWave::unit(1, 2.0)};

    add_check(rep, cfg, "crosscheck.monomial_pairs",
              sweeps::monomial_pair_agreement_max(cfg.b, 200, cfg.seed), 1e-10,
              "symbolic products agree with sequential Gaussian application");

    struct Rel {
        const char* name;
        double tol;
    };
    for (Rel rel : {Rel{"K1_eps1_exchange", 1e-10}, Rel{"K1_phi1_exchange", 1e-10},
                    Rel{"eps1_phi1_commutator", 1e-9}}) {
        double res = numeric_relation_check(r, rel.name, cfg.b, waves, grid, lambdas);
        add_check(rep, cfg, std::string("crosscheck.") + rel.name, res, rel.tol,
                  "pointwise evaluation of the relation on Gaussian test states");
        int wid = 0;
        for (const auto& w : waves) {
            for (const auto& pt : {Complex(-1.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)}) {
                LabResidualRow row;
                row.relation = rel.name;
                row.b = cfg.b;
                row.wave_id = wid;
                row.gridpoint = std::to_string(pt.real());
                row.residual =
                    numeric_relation_check(r, rel.name, cfg.b, {w}, {{pt}}, lambdas);
                rep.lab_rows.push_back(std::move(row));
            }
            ++wid;
        }
    }
    {
        double res = numeric_relation_check(r, "K1_eps1_exchange_wrong_power", cfg.b, waves,
                                            grid, lambdas);
        add_bool(rep, cfg, "crosscheck.negative_wrong_power", res >= 0.1,
                 "the deliberately wrong exchange power is detected");
    }
    {
        add_check(rep, cfg, "crosscheck.wavepacket_unitarity",
                  sweeps::wavepacket_unitarity_max(p, {0.3, 1.0}, quad), 1e-9,
                  "|wavepacket coefficient| = 1 for real t");
        WavepacketCoeff w0 = wavepacket_coeff(p, 0.5, Complex(0.0, 0.0), quad);
        add_check(rep, cfg, "crosscheck.wavepacket_t0", std::abs(w0.value - 1.0), 1e-12,
                  "coefficient at t = 0 is exactly 1");
        double worst = 0.0;
        for (double t : {-1.5, -0.5, 0.4, 1.2})
            worst = std::max(worst,
                             wavepacket_fe_step_residual(p, 0.5, Complex(t, 0.0), quad));
        add_check(rep, cfg, "crosscheck.wavepacket_fe_step", worst, 1e-8,
                  "one b-step of the functional equation inside the coefficient");
        ContinuationCheck cc = wavepacket_continuation_check(p, 0.5, {1e2, 1e3, 1e4}, quad);
        add_check(rep, cfg, "crosscheck.wavepacket_continuation_quadrature",
                  cc.residual_quad_vs_algebraic, 1e-8,
                  "continuation t -> -i b matches the one-step algebraic factor");
        add_check(rep, cfg, "crosscheck.wavepacket_continuation_gaussian",
                  cc.residual_gaussian_vs_quad, 1e-6,
                  "narrow-Gaussian matrix element of eps reproduces the continuation");
    }
    {
        for (int n = 1; n <= 5; ++n) {
            auto res = qbinom_operator_check(p, n, quad);
            double worst = *std::max_element(res.begin(), res.end());
            add_check(rep, cfg, "crosscheck.qbinom_n" + std::to_string(n), worst, 1e-5,
                      "(V+U)^n expansion matches the q-beta integer continuation");
        }
    }
    {
        // e^{pi b (2p)} acting on C e^{-a u^2} returns C e^{-a (u - i b)^2}
        double b = cfg.b, a = 1.3;
        Exponents e(1, 0);
        e.eta(0) = 2;
        GaussianWave f = GaussianWave::unit(1, a);
        GaussianWave g = apply_monomial({e, PhaseCoefficient::one()}, f, LabContext{b, {}});
        double res = std::abs(g.log_amp - Complex(a * b * b, 0.0)) +
                     std::abs(g.lin[0] - Complex(0.0, 2.0 * a * b));
        add_check(rep, cfg, "crosscheck.pure_shift_action", res, 1e-12,
                  "momentum exponential shifts u by -i b");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// assembly and serialization
// ---------------------------------------------------------------------------

bool SuiteReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string SuiteReport::summary_line() const {
    std::size_t passed = 0;
    for (const auto& c : checks) passed += c.pass ? 1 : 0;
    std::ostringstream os;
    if (passed == checks.size())
        os << "PASS " << passed << "/" << checks.size();
    else
        os << "FAIL " << (checks.size() - passed) << "/" << checks.size();
    return os.str();
}

SuiteReport run_suite(const std::string& suite, const SuiteConfig& config) {
    SuiteReport rep;
    rep.suite = suite;
    rep.config = config;
    if (suite == "dilog") {
        dilog_suite(rep, config);
    } else if (suite == "qweyl") {
        qweyl_suite(rep, config);
    } else if (suite == "sl2") {
        sl2_suite(rep, config);
    } else if (suite == "sl3") {
        sl3_suite(rep, config);
    } else if (suite == "duality") {
        duality_suite(rep, config);
    } else if (suite == "crosscheck") {
        crosscheck_suite(rep, config);
    } else if (suite == "all") {
        dilog_suite(rep, config);
        qweyl_suite(rep, config);
        sl2_suite(rep, config);
        sl3_suite(rep, config);
        duality_suite(rep, config);
        crosscheck_suite(rep, config);
    } else {
        throw InvalidParameter("run_suite: unknown suite " + suite);
    }
    std::sort(rep.checks.begin(), rep.checks.end(),
              [](const CheckResult& x, const CheckResult& y) { return x.name < y.name; });
    std::sort(rep.relations.begin(), rep.relations.end(),
              [](const RelationSummary& x, const RelationSummary& y) {
                  return x.relation < y.relation;
              });
    return rep;
}

std::string report_json(const SuiteReport& report) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["suite"] = report.suite;
    j["config"] = {
        {"b", report.config.b},
        {"seed", report.config.seed},
        {"mutate", report.config.mutate},
        {"quad",
         {{"truncation", report.config.quad.truncation},
          {"indent_radius", report.config.quad.indent_radius},
          {"panel_count", report.config.quad.panel_count},
          {"target_abs_error", report.config.quad.target_abs_error}}},
    };
    nlohmann::ordered_json tols = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.config.tol_overrides) tols[k] = v;
    j["config"]["tol_overrides"] = tols;
    j["summary"] = report.summary_line();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks)
        j["checks"].push_back({{"name", c.name},
                               {"pass", c.pass},
                               {"residual", c.residual},
                               {"tolerance", c.tolerance},
                               {"paper_ref", c.property}});
    if (!report.relations.empty()) {
        j["relations"] = nlohmann::ordered_json::array();
        for (const auto& r : report.relations)
            j["relations"].push_back({{"relation", r.relation},
                                      {"pass", r.pass},
                                      {"residual_monomial_count", r.residual_monomial_count},
                                      {"residual_preview", r.residual_preview}});
    }
    if (!report.lab_rows.empty()) {
        j["lab_residuals"] = nlohmann::ordered_json::array();
        for (const auto& r : report.lab_rows)
            j["lab_residuals"].push_back({{"relation", r.relation},
                                          {"b", r.b},
                                          {"wave_id", r.wave_id},
                                          {"gridpoint", r.gridpoint},
                                          {"residual", r.residual}});
    }
    return j.dump(2) + "\n";
}

std::string report_csv(const SuiteReport& report) {
    std::ostringstream os;
    os.precision(17);
    if (!report.lab_rows.empty()) {
        os << "relation,b,wave_id,gridpoint,residual\n";
        for (const auto& r : report.lab_rows)
            os << r.relation << "," << r.b << "," << r.wave_id << "," << r.gridpoint << ","
               << r.residual << "\n";
        return os.str();
    }
    os << "name,pass,residual,tolerance\n";
    for (const auto& c : report.checks)
        os << c.name << "," << (c.pass ? 1 : 0) << "," << c.residual << "," << c.tolerance
           << "\n";
    return os.str();
}

std::string report_text(const SuiteReport& report) {
    std::ostringstream os;
    os.precision(6);
    for (const auto& c : report.checks)
        os << (c.pass ? "[ OK ] " : "[FAIL] ") << c.name << "  residual=" << std::scientific
           << c.residual << "  tol=" << c.tolerance << "\n";
    os << report.summary_line() << "\n";
    return os.str();
}

std::string relation_report_json(const RelationReport& report) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& e : report.entries)
        j.push_back({{"relation", e.name},
                     {"pass", e.pass},
                     {"residual_monomial_count", e.difference.monomial_count()},
                     {"residual_preview", e.pass ? "" : preview(e.difference)}});
    return j.dump(2) + "\n";
}

std::string gb_value_json(const GbValue& v) {
    nlohmann::ordered_json j = {{"re", v.value.real()},
                                {"im", v.value.imag()},
                                {"abs_err", v.abs_error_estimate},
                                {"at_pole", v.at_pole},
                                {"at_zero", v.at_zero}};
    return j.dump() + "\n";
}

}  // namespace qdilog
