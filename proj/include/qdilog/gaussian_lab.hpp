#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qdilog/dilog.hpp"
#include "qdilog/reps.hpp"
#include "qdilog/weyl.hpp"

namespace qdilog {

// Closed-form test state C * exp(sum_k (-a_k u_k^2 + beta_k u_k)).
// The class is closed under every monomial action: multiplication by
// e^{s u_k} adds to beta_k, the momentum exponential shifts u_k by a
// complex amount, and neither changes the widths. The amplitude C is kept
// as its logarithm so that delta-limit sweeps with very narrow states
// (complex shifts produce C ~ e^{a b^2}) stay inside double range.
struct GaussianWave {
    Complex log_amp{0.0, 0.0};
    std::vector<double> width;  // a_k > 0
    std::vector<Complex> lin;   // beta_k

    static GaussianWave unit(int nvars, double a = 1.0);

    Complex amp() const;
    Complex value(const std::vector<Complex>& u) const;

    // f(u_k + c) as a new wave
    GaussianWave shifted(int k, Complex c) const;
    // e^{s u_k} f
    GaussianWave mul_exp(int k, Complex s) const;
};

// Sum of Gaussian waves (the image of a multi-monomial element).
struct WaveSum {
    std::vector<GaussianWave> waves;
    Complex value(const std::vector<Complex>& u) const;
};

struct LabContext {
    double b = 0.7;
    std::vector<double> lambdas;
};

// Closed-form action of a Weyl monomial: per variable,
//   e^{s_u u + s_p p} = e^{-i s_u s_p / (4 pi)} e^{s_u u} (u -> u - i s_p / (2 pi))
// with s_u = pi (b xi + xi~/b), s_p = pi (b eta + eta~/b); the central
// lambda exponents and the monomial's exact coefficient enter the amplitude.
GaussianWave apply_monomial(const WeylMonomial& m, const GaussianWave& f, const LabContext& ctx);

WaveSum apply_element(const OperatorElement& e, const GaussianWave& f, const LabContext& ctx);

// Default evaluation grid {-2, -1, -0.5, 0, 0.5, 1, 2}^nvars.
std::vector<std::vector<Complex>> default_grid(int nvars);

// Pointwise comparison of two wave sums over a grid; returns
// max |L - R| / max(|L|, |R|, tiny) with the maxima taken over the grid.
double wave_residual(const WaveSum& lhs, const WaveSum& rhs,
                     const std::vector<std::vector<Complex>>& grid);

// Relations checked by sequential generator application on test waves
// (never through symbolic products), giving an independent numeric
// confirmation path for the symbolic suite.
//
// Supported names: "K{i}_eps{j}_exchange", "K{i}_phi{j}_exchange",
// "eps{i}_phi{j}_commutator", and the deliberately wrong
// "K{i}_eps{j}_exchange_wrong_power" negative control.
double numeric_relation_check(const PositiveRep& rep, const std::string& relation, double b,
                              const std::vector<GaussianWave>& waves,
                              const std::vector<std::vector<Complex>>& grid,
                              const std::vector<double>& lambdas);

struct WavepacketCoeff {
    double b;
    double lambda;
    Complex t;
    Complex value;
    double abs_error_estimate;
};

// Coefficient by which the complex power eps^{i t / b} acts on the
// delta-supported initial state:
//   e^{pi i (t - 2 lambda) t / 2} G_b(Q/2 - i lambda + i t) / G_b(Q/2 - i lambda).
WavepacketCoeff wavepacket_coeff(const ModularParameter& p, double lambda, Complex t,
                                 const QuadratureSpec& quad = {});

// Residual of one b-step of the functional equation inside the wavepacket
// coefficient: W(t - i b) = W(t) q^{-1/2} e^{pi b (t - lambda)} (1 + q e^{2 pi b (lambda - t)}).
double wavepacket_fe_step_residual(const ModularParameter& p, double lambda, Complex t,
                                   const QuadratureSpec& quad = {});

// Continuation t -> -i b: compares (a) the quadrature value of W(-i b),
// (b) the exact one-step functional-equation value, and (c) the matrix
// element of the symbolic eps on narrow Gaussians (widths `widths`,
// Richardson-extrapolated in 1/a against a fixed Gaussian test functional).
struct ContinuationCheck {
    Complex quadrature;
    Complex algebraic;
    Complex gaussian_extrapolated;
    double residual_quad_vs_algebraic;
    double residual_gaussian_vs_quad;
};
ContinuationCheck wavepacket_continuation_check(const ModularParameter& p, double lambda,
                                                const std::vector<double>& widths,
                                                const QuadratureSpec& quad = {});

// Exact expansion of (V + U)^n with U = e^{pi b (2u)}, V = e^{pi b (2p)}
// (so U V = q^2 V U), coefficients taken in VU-order, compared against the
// integer continuation of the q-beta ratio at (n b, k b). Returns one
// relative deviation per k = 0..n.
std::vector<double> qbinom_operator_check(const ModularParameter& p, int n,
                                          const QuadratureSpec& quad = {});

}  // namespace qdilog
