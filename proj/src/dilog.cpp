#include "qdilog/dilog.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qdilog {

namespace {

constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Gauss-Legendre nodes on [-1, 1], computed once by Newton iteration.
// ---------------------------------------------------------------------------
struct GLRule {
    std::vector<double> x;
    std::vector<double> w;
};

GLRule make_gauss_legendre(int n) {
    GLRule r;
    r.x.resize(std::size_t(n));
    r.w.resize(std::size_t(n));
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double z1, pp;
        do {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            z1 = z;
            z = z1 - p1 / pp;
        } while (std::fabs(z - z1) > 1e-15);
        r.x[std::size_t(i)] = -z;
        r.x[std::size_t(n - 1 - i)] = z;
        r.w[std::size_t(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
        r.w[std::size_t(n - 1 - i)] = r.w[std::size_t(i)];
    }
    return r;
}

const GLRule& gl16() {
    static const GLRule rule = make_gauss_legendre(16);
    return rule;
}

// ---------------------------------------------------------------------------
// Contour pieces: straight segments between complex endpoints and circular
// arcs around the origin.
// ---------------------------------------------------------------------------
struct Piece {
    enum class Kind { Segment, Arc } kind;
    Complex t0, t1;        // segment endpoints
    double radius = 0.0;   // arc
    double th0 = 0.0, th1 = 0.0;
};

Piece segment(Complex a, Complex b) { return Piece{Piece::Kind::Segment, a, b, 0, 0, 0}; }
Piece arc(double r, double th0, double th1) { return Piece{Piece::Kind::Arc, 0, 0, r, th0, th1}; }

template <class F>
Complex integrate_piece(const F& f, const Piece& pc, int subdiv) {
    const GLRule& gl = gl16();
    Complex sum = 0.0;
    for (int k = 0; k < subdiv; ++k) {
        double s0 = double(k) / subdiv, s1 = double(k + 1) / subdiv;
        for (std::size_t i = 0; i < gl.x.size(); ++i) {
            double s = 0.5 * (s0 + s1) + 0.5 * (s1 - s0) * gl.x[i];
            double w = 0.5 * (s1 - s0) * gl.w[i];
            if (pc.kind == Piece::Kind::Segment) {
                Complex t = pc.t0 + (pc.t1 - pc.t0) * s;
                sum += w * f(t) * (pc.t1 - pc.t0);
            } else {
                double th = pc.th0 + (pc.th1 - pc.th0) * s;
                Complex t = pc.radius * std::exp(Complex(0.0, th));
                Complex dt = Complex(0.0, 1.0) * t * (pc.th1 - pc.th0);
                sum += w * f(t) * dt;
            }
        }
    }
    return sum;
}

template <class F>
Complex integrate_contour(const F& f, const std::vector<Piece>& pieces, int subdiv) {
    Complex total = 0.0;
    for (const auto& pc : pieces) total += integrate_piece(f, pc, subdiv);
    return total;
}

// Break [a, b] (0 < a < b) into panels graded from the inner end: panel
// length grows with distance but is capped by the analyticity scale of the
// integrand (pole towers at distance ~2*bmin from the axis) and by the
// oscillation wavelength along the segment.
void graded_panels(std::vector<Piece>& out, double a, double b, double feature_cap,
                   double osc_cap, bool negative) {
    double t = a;
    while (t < b) {
        double h = std::min({feature_cap, osc_cap, std::max(0.6 * t, a)});
        double next = std::min(b, t + h);
        if (negative)
            out.push_back(segment(Complex(-next, 0.0), Complex(-t, 0.0)));
        else
            out.push_back(segment(Complex(t, 0.0), Complex(next, 0.0)));
        t = next;
    }
}

// Integrand of the exponent integral of G_b, written in the
// overflow-safe form on the right half-axis.
Complex gb_integrand(double b, Complex z, Complex t, double Q) {
    if (t.imag() == 0.0 && t.real() > 0.0) {
        double tr = t.real();
        Complex num = std::exp(kPi * tr * (z - Q));
        double d1 = 1.0 - std::exp(-kPi * b * tr);
        double d2 = 1.0 - std::exp(-kPi * tr / b);
        return num / (d1 * d2 * tr);
    }
    Complex num = std::exp(kPi * t * z);
    Complex d1 = std::exp(kPi * b * t) - 1.0;
    Complex d2 = std::exp(kPi * t / b) - 1.0;
    return num / (d1 * d2 * t);
}

double tail_bound(double mu, double T, double b) {
    // | integrand | <= e^{-pi mu |t|} / (pi mu |t| (1-e^{-pi b T})(1-e^{-pi T/b}))
    double d1 = 1.0 - std::exp(-kPi * b * T);
    double d2 = 1.0 - std::exp(-kPi * T / b);
    return std::exp(-kPi * mu * T) / (kPi * mu * T * d1 * d2);
}

}  // namespace

// ---------------------------------------------------------------------------
// ModularParameter
// ---------------------------------------------------------------------------

ModularParameter ModularParameter::create(double b, bool allow_resonant) {
    if (!(b >= 0.1 && b <= 0.95))
        throw InvalidParameter("ModularParameter: b must lie in [0.1, 0.95]");
    if (!allow_resonant) {
        const double b2 = b * b;
        for (int q = 1; q <= 64; ++q) {
            double p = std::round(b2 * q);
            if (std::fabs(b2 - p / q) < 1e-12)
                throw InvalidParameter(
                    "ModularParameter: b^2 is within 1e-12 of a rational with denominator <= 64 "
                    "(lattice resonance); pass allow_resonant to override");
        }
    }
    return ModularParameter(b);
}

Complex ModularParameter::q() const { return std::exp(Complex(0.0, kPi * b_ * b_)); }
Complex ModularParameter::q_dual() const { return std::exp(Complex(0.0, kPi / (b_ * b_))); }

// ---------------------------------------------------------------------------
// zeta_b
// ---------------------------------------------------------------------------

Complex zeta_b(double b) {
    if (!(b > 0.0)) throw InvalidParameter("zeta_b: b must be positive");
    double b2 = b * b;
    return std::exp(Complex(0.0, 0.5 * kPi * ((b2 + 1.0 / b2) / 6.0 + 0.5)));
}

// ---------------------------------------------------------------------------
// gb_strip
// ---------------------------------------------------------------------------

GbValue gb_strip(const ModularParameter& p, Complex z, const QuadratureSpec& quad) {
    const double b = p.b();
    const double Q = p.Q();
    const double margin = std::min(z.real(), Q - z.real());
    if (margin + 1e-12 < 0.05 * Q)
        throw MarginViolation("gb_strip: Re z within 0.05*Q of the strip boundary");

    const double bmin = std::min(b, 1.0 / b);
    // The indentation radius is capped twice: below the first pole tower at
    // |t| = 2*bmin, and by e^{pi r |Im z|}, which for Im z < 0 grows on the
    // upper semicircle and would turn into pure cancellation against the
    // straight segments.
    const double r =
        std::min({quad.indent_radius > 0 ? quad.indent_radius : 0.5 * bmin, bmin,
                  2.0 / (kPi * std::max(1.0, std::fabs(z.imag())))});
    const double target = quad.target_abs_error;

    const double mu_plus = Q - z.real();
    const double mu_minus = z.real();
    auto pick_T = [&](double mu) {
        double want = std::log(40.0 / target) / (kPi * mu);
        return std::clamp(want, 4.0, quad.truncation);
    };
    const double Tr = pick_T(mu_plus);
    const double Tl = pick_T(mu_minus);

    // panel caps: pole towers sit at |Im t| = 2*bmin, oscillation frequency
    // along the axis is |Im z| / 2 cycles per unit t
    const double feature_cap = 1.2 * bmin;
    const double osc_cap = 1.6 / std::max(std::fabs(z.imag()), 0.6);
    const double density = std::max(1.0, double(quad.panel_count) / 64.0);

    std::vector<Piece> pieces;
    graded_panels(pieces, r, Tl, feature_cap / density, osc_cap / density, /*negative=*/true);
    {
        int nsc = std::max(6, int(std::ceil(kPi * r * (std::abs(z) + 1.0) / 1.2)));
        double dth = kPi / nsc;
        for (int i = 0; i < nsc; ++i) pieces.push_back(arc(r, kPi - i * dth, kPi - (i + 1) * dth));
    }
    graded_panels(pieces, r, Tr, feature_cap / density, osc_cap / density, /*negative=*/false);

    auto f = [&](Complex t) { return gb_integrand(b, z, t, Q); };

    const double tails = tail_bound(mu_plus, Tr, b) + tail_bound(mu_minus, Tl, b);

    Complex I_prev = integrate_contour(f, pieces, 1);
    Complex I = I_prev;
    double drift = std::numeric_limits<double>::infinity();
    for (int round = 1; round <= 4; ++round) {
        I = integrate_contour(f, pieces, 1 << round);
        drift = std::abs(I - I_prev);
        I_prev = I;
        if (drift < 0.25 * target) break;
    }

    double err_I = drift + tails;
    GbValue out;
    out.value = std::exp(-I) / zeta_b(b);
    out.abs_error_estimate = std::abs(out.value) * (err_I + 1e-15 * (3.0 + std::abs(I)));
    if (err_I > std::max(target, 1e-13) * 40.0)
        throw NonConvergence("gb_strip: quadrature error estimate exceeds target after refinement");
    return out;
}

// ---------------------------------------------------------------------------
// lattice classification and gb_eval
// ---------------------------------------------------------------------------

LatticePoint classify_lattice(const ModularParameter& p, Complex z, double tol) {
    LatticePoint lp;
    if (std::fabs(z.imag()) >= tol) return lp;
    const double b = p.b();
    auto match_row = [&](double d, LatticePoint::Kind kind) {
        if (d < -tol) return false;
        int nmax = int(std::floor((d + tol) / b));
        for (int n = 0; n <= nmax; ++n) {
            double rem = d - n * b;
            int m = int(std::lround(rem * b));  // rem = m / b
            if (m < 0) continue;
            if (std::fabs(n * b + m / b - d) < tol) {
                lp.kind = kind;
                lp.n = n;
                lp.m = m;
                return true;
            }
        }
        return false;
    };
    if (match_row(-z.real(), LatticePoint::Kind::Pole)) return lp;
    match_row(z.real() - p.Q(), LatticePoint::Kind::Zero);
    return lp;
}

GbValue gb_eval(const ModularParameter& p, Complex z, const QuadratureSpec& quad) {
    const double b = p.b();
    const double Q = p.Q();

    LatticePoint lp = classify_lattice(p, z);
    if (lp.kind == LatticePoint::Kind::Pole) {
        GbValue v;
        v.at_pole = true;
        return v;
    }
    if (lp.kind == LatticePoint::Kind::Zero) {
        GbValue v;
        v.at_zero = true;
        v.value = 0.0;
        return v;
    }

    const double margin = std::min(z.real(), Q - z.real());
    if (margin >= 0.05 * Q + 1e-9) return gb_strip(p, z, quad);

    const long k = std::lround((z.real() - 0.5 * Q) / b);
    const Complex z0 = z - double(k) * b;
    GbValue base = gb_strip(p, z0, quad);

    Complex factor = 1.0;
    if (k > 0) {
        for (long j = 0; j < k; ++j)
            factor *= 1.0 - std::exp(Complex(0.0, 2.0 * kPi * b) * (z0 + double(j) * b));
    } else {
        for (long j = 1; j <= -k; ++j)
            factor /= 1.0 - std::exp(Complex(0.0, 2.0 * kPi * b) * (z0 - double(j) * b));
    }

    GbValue out;
    out.value = base.value * factor;
    double rel = base.abs_error_estimate / std::max(std::abs(base.value), 1e-300);
    out.abs_error_estimate =
        std::abs(out.value) * (rel + 4e-16 * double(std::labs(k) + 1));
    return out;
}

// ---------------------------------------------------------------------------
// little_gb
// ---------------------------------------------------------------------------

GbValue little_gb(const ModularParameter& p, double x, const QuadratureSpec& quad,
                  bool dual_base) {
    if (!(x > 0.0)) throw InvalidParameter("little_gb: x must be positive");
    const double beff = dual_base ? p.b_inv() : p.b();
    // log x / (2 pi i b_eff) = -i log x / (2 pi b_eff)
    Complex arg = Complex(0.5 * p.Q(), -std::log(x) / (2.0 * kPi * beff));
    GbValue g = gb_eval(p, arg, quad);
    if (g.at_pole || g.at_zero)
        throw PoleEvaluation("little_gb: G_b argument on the pole/zero lattice");
    GbValue out;
    out.value = std::conj(zeta_b(p.b())) / g.value;
    out.abs_error_estimate =
        std::abs(out.value) * g.abs_error_estimate / std::max(std::abs(g.value), 1e-300);
    return out;
}

// ---------------------------------------------------------------------------
// qbeta
// ---------------------------------------------------------------------------

GbValue qbeta(const ModularParameter& p, Complex t, Complex tau, const QuadratureSpec& quad) {
    const double Q = p.Q();
    const Complex args[3] = {Q + t, Q + tau, Q + t - tau};
    LatticePoint cls[3];
    int zeros = 0, poles = 0;
    for (int i = 0; i < 3; ++i) {
        cls[i] = classify_lattice(p, args[i]);
        if (cls[i].kind == LatticePoint::Kind::Zero) ++zeros;
        if (cls[i].kind == LatticePoint::Kind::Pole) ++poles;
    }

    if (poles == 0 && zeros == 0) {
        GbValue g1 = gb_eval(p, args[0], quad);
        GbValue g2 = gb_eval(p, args[1], quad);
        GbValue g3 = gb_eval(p, args[2], quad);
        GbValue out;
        out.value = g1.value / (g2.value * g3.value);
        auto rel = [](const GbValue& g) {
            return g.abs_error_estimate / std::max(std::abs(g.value), 1e-300);
        };
        out.abs_error_estimate = std::abs(out.value) * (rel(g1) + rel(g2) + rel(g3));
        return out;
    }

    if (zeros == 3 && poles == 0) {
        // Integer continuation: arguments Q + n b on a single lattice row.
        bool pure_b = cls[0].m == 0 && cls[1].m == 0 && cls[2].m == 0;
        bool pure_binv = cls[0].n == 0 && cls[1].n == 0 && cls[2].n == 0;
        if (pure_b || pure_binv) {
            Complex q2 = pure_b ? p.q() * p.q() : p.q_dual() * p.q_dual();
            auto idx = [&](int i) { return pure_b ? cls[i].n : cls[i].m; };
            auto prod = [&](int n) {
                Complex r = 1.0;
                Complex qp = 1.0;
                for (int l = 1; l <= n; ++l) {
                    qp *= q2;
                    r *= 1.0 - qp;
                }
                return r;
            };
            if (idx(0) != idx(1) + idx(2))
                throw UnresolvablePole("qbeta: inconsistent lattice indices");
            GbValue out;
            out.value = prod(idx(0)) / (prod(idx(1)) * prod(idx(2)));
            out.abs_error_estimate = std::abs(out.value) * 1e-14 * double(idx(0) + 1);
            return out;
        }
        throw UnresolvablePole("qbeta: arguments on mixed lattice rows");
    }

    throw UnresolvablePole("qbeta: singular argument pattern has no finite limit");
}

// ---------------------------------------------------------------------------
// ft_gb_check
// ---------------------------------------------------------------------------

FtCheckResult ft_gb_check(const ModularParameter& p, double x, const QuadratureSpec& quad) {
    if (!(x > 0.0)) throw InvalidParameter("ft_gb_check: x must be positive");
    const double b = p.b();
    const double Q = p.Q();
    const double lx = std::log(x);

    QuadratureSpec inner = quad;
    inner.target_abs_error = std::max(quad.target_abs_error, 1e-10);
    inner.truncation = std::max(quad.truncation, 60.0);

    auto h = [&](Complex t) {
        Complex phase = std::exp(Complex(0.0, -kPi) * t * t + Complex(0.0, lx / b) * t);
        GbValue g = gb_eval(p, Q + Complex(0.0, 1.0) * t, inner);
        return phase / g.value;
    };

    const double r = 0.4 * b;
    const double Tl = std::max(4.0, 22.0 / (kPi * Q));
    const double Tr = 3.2 + 0.2 * std::fabs(lx) / b;
    const Complex ray_dir = std::exp(Complex(0.0, -kPi / 4.0));

    std::vector<Piece> pieces;
    // left tail: asymptotic phases cancel, decay e^{pi Q t}; modest panels
    {
        double t = r;
        while (t < Tl) {
            double hcap = std::min(0.5, 1.6 / std::max(1.0, std::fabs(lx) / b));
            double next = std::min(Tl, t + std::max(0.15, std::min(hcap, 0.6 * t)));
            pieces.push_back(segment(Complex(-next, 0.0), Complex(-t, 0.0)));
            t = next;
        }
    }
    // indentation above t = 0 followed by the swing down to the -45 deg ray
    for (int i = 0; i < 8; ++i) pieces.push_back(arc(r, kPi - i * kPi / 8, kPi - (i + 1) * kPi / 8));
    for (int i = 0; i < 3; ++i) pieces.push_back(arc(r, -i * kPi / 12, -(i + 1) * kPi / 12));
    // rotated right arm: Gaussian decay e^{-pi s^2}
    {
        double s = r;
        while (s < Tr) {
            double hcap = std::min(0.3, 1.2 / std::max(1.0, 2.0 * s));
            double next = std::min(Tr, s + hcap);
            pieces.push_back(segment(ray_dir * s, ray_dir * next));
            s = next;
        }
    }

    Complex lhs_prev = integrate_contour(h, pieces, 1);
    Complex lhs = integrate_contour(h, pieces, 2);
    if (std::abs(lhs - lhs_prev) > 1e-7) {
        lhs_prev = lhs;
        lhs = integrate_contour(h, pieces, 4);
        if (std::abs(lhs - lhs_prev) > 1e-6)
            throw NonConvergence("ft_gb_check: contour quadrature failed to settle");
    }

    GbValue rhs = little_gb(p, x, inner);
    double residual = std::abs(lhs - rhs.value) / std::max(std::abs(rhs.value), 1e-300);
    return FtCheckResult{lhs, rhs.value, residual};
}

}  // namespace qdilog
