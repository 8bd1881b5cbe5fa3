#pragma once

#include <complex>

#include "qdilog/errors.hpp"

namespace qdilog {

using Complex = std::complex<double>;

// Deformation parameter b of the modular pair (b, 1/b), restricted to the
// representative 0 < b < 1 with derived Q = b + 1/b.
//
// Validation accepts 0.1 <= b <= 0.95 and, unless allow_resonant is set,
// rejects b whose square is within 1e-12 of a rational with denominator
// <= 64; near such b the pole/zero lattices nb + m/b degenerate and
// lattice-sensitive checks can misfire.
class ModularParameter {
  public:
    static ModularParameter create(double b, bool allow_resonant = false);

    double b() const { return b_; }
    double b_inv() const { return 1.0 / b_; }
    double Q() const { return b_ + 1.0 / b_; }
    // q = e^{i pi b^2}
    Complex q() const;
    // q~ = e^{i pi b^{-2}}
    Complex q_dual() const;

  private:
    explicit ModularParameter(double b) : b_(b) {}
    double b_ = 0.7;
};

struct QuadratureSpec {
    double truncation = 40.0;     // hard cap T on the half-length of the real segments
    double indent_radius = 0.35;  // semicircle radius at t = 0 (clamped below min(b,1/b))
    int panel_count = 64;         // baseline panel budget per segment
    double target_abs_error = 1e-10;
};

struct GbValue {
    Complex value{0.0, 0.0};
    double abs_error_estimate = 0.0;
    bool at_pole = false;
    bool at_zero = false;
};

// zeta_b = e^{(i pi / 2)((b^2 + b^{-2})/6 + 1/2)}; defined for any b > 0
// (and invariant under b <-> 1/b).
Complex zeta_b(double b);

// Contour-integral evaluation of G_b(z) for z inside the strip
// 0 < Re z < Q with margin >= 0.05 Q from both boundaries:
//
//   G_b(z) = (1/zeta_b) exp( - I(z) ),
//   I(z)   = int_Omega e^{pi t z} / ((e^{pi b t} - 1)(e^{pi t/b} - 1) t) dt,
//
// where Omega runs along R, left to right, indented by a semicircle above
// the pole at t = 0. The real truncation T is chosen from the decay rate
// e^{-pi T min(Re z, Q - Re z)} subject to the spec's cap, composite
// Gauss-Legendre panels are graded toward the indentation and refined by
// doubling until the exponent integral drift is below target.
//
// Throws MarginViolation outside the safe strip and NonConvergence when the
// error estimate still exceeds the target after maximal refinement.
GbValue gb_strip(const ModularParameter& p, Complex z, const QuadratureSpec& quad = {});

// G_b on the whole plane: flags lattice points (poles at -nb - m/b, zeros
// at Q + nb + m/b, n,m >= 0, tolerance 1e-9), otherwise reduces Re z into
// the central band by integer b-steps of the functional equation
// G_b(x + b) = (1 - e^{2 pi i b x}) G_b(x) and calls gb_strip. Only b-steps
// are used, so the b^{-1}-step equation stays available as an independent
// cross-check.
GbValue gb_eval(const ModularParameter& p, Complex z, const QuadratureSpec& quad = {});

// g_b(x) = conj(zeta_b) / G_b(Q/2 + log x / (2 pi i b)) for x > 0.
// With dual_base set, evaluates g_{b^{-1}} (same G_b by self-duality, the
// logarithm is rescaled by b instead of 1/b).
GbValue little_gb(const ModularParameter& p, double x, const QuadratureSpec& quad = {},
                  bool dual_base = false);

// q-beta ratio G_b(Q+t) / (G_b(Q+tau) G_b(Q+t-tau)).
//
// When all three arguments land on the zero lattice along a single row
// (arguments Q + n b, the integer continuation t -> -i b n of the
// q-binomial), the common G_b(Q) zeros cancel through the functional
// equation and the finite part is the Gauss binomial
//   prod_{l=1..n}(1-q^{2l}) / (prod_{l=1..k} ... prod_{l=1..n-k} ...),
// which is what this returns. A singular pattern that does not cancel
// (one or two singular arguments, or mixed lattice rows) throws
// UnresolvablePole.
GbValue qbeta(const ModularParameter& p, Complex t, Complex tau, const QuadratureSpec& quad = {});

struct FtCheckResult {
    Complex lhs;
    Complex rhs;
    double residual;
};

// Both sides of the Fourier transform identity
//   int_{R + i0} e^{-pi i t^2} / G_b(Q + i t) * x^{i t / b} dt  =  g_b(x).
// The contour is indented above t = 0; for t -> +infinity the integrand is
// a pure Fresnel oscillation, so the right arm is rotated to the ray
// t = s e^{-i pi/4} (no poles lie in the swept sector) where it gains
// Gaussian decay.
FtCheckResult ft_gb_check(const ModularParameter& p, double x, const QuadratureSpec& quad = {});

// Lattice classification used by gb_eval / qbeta.
struct LatticePoint {
    enum class Kind { None, Pole, Zero } kind = Kind::None;
    int n = 0;
    int m = 0;
};
LatticePoint classify_lattice(const ModularParameter& p, Complex z, double tol = 1e-9);

}  // namespace qdilog
