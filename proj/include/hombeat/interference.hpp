#pragma once

#include <cstddef>

#include "hombeat/spectral.hpp"

namespace hombeat {

/// How a coincidence probability was obtained.
enum class Method {
  analytic,    // closed form in (tau, mu, zeta)
  degenerate,  // triangular-dip closed form, mu = 0
  zero_delay,  // sinc-beat closed form, tau = 0
  oracle,      // time-domain window-amplitude quadrature
  general,     // spectral quadrature for an arbitrary JSA
  separable,   // independent-photon overlap formula
};

struct CoincidenceResult {
  double p_c = 0.0;           // coincidence probability, in [0, 1]
  Method method = Method::analytic;
  double numeric_error = 0.0; // estimated absolute error; 0 for closed forms
};

/// Parameters of the time-domain oracle integration.
struct DelayParams {
  double tau_ps = 0.0;       // relative optical delay
  double t_window_ps = 0.0;  // integration half-width, must cover both
                             // amplitude windows: >= 1/zeta + |tau|
  DelayParams(double tau, double t_window);
};

/// Coincidence probability at the 50/50 beamsplitter,
///   p_c = 1/2 (1 - sin((mu/zeta)(2 - zeta |tau|)) / (2 mu/zeta))
/// for |tau| < 2/zeta and exactly 1/2 outside the coherence window.
/// Even in both tau and mu; continuous at mu -> 0 (series branch).
CoincidenceResult pc_analytic(double tau, double mu, double zeta);

/// Degenerate-pair triangular dip, p_c = 1/2 (1 - tri(tau zeta / 2)) with
/// tri(x) = max(0, 1 - |x|).  Equals pc_analytic at mu = 0.
CoincidenceResult pc_degenerate(double tau, double zeta);

/// Zero-delay beat, p_c = 1/2 (1 - sinc(2 mu / zeta)).
/// Shares the closed-form kernel with pc_analytic(0, mu, zeta).
CoincidenceResult pc_zero_delay(double mu, double zeta);

/// Two-photon coincidence amplitude in the time difference t:
///   A(t; tau) = 1/2 ( e^{i mu t} P(t zeta/2) - e^{-i mu (t+tau)} P((t+tau) zeta/2) )
/// where P(x) = 1 for |x| <= 1/2 and 0 elsewhere.
Complex amplitude_oracle(double t, double tau, double mu, double zeta);

/// Brute-force check of the closed form: p_c = (zeta/2) * integral |A(t;tau)|^2 dt
/// by piecewise composite trapezoid with the window edges as explicit nodes.
/// `resolution` is the total node budget (>= 1001); numeric_error is a
/// half-resolution Richardson estimate.
CoincidenceResult pc_numeric_oracle(double tau, double mu, double zeta,
                                    std::size_t resolution);

/// Same, integrating over [-t_window, t_window]; throws if the window does
/// not cover both amplitude windows.
CoincidenceResult pc_numeric_oracle(const DelayParams& delay, double mu, double zeta,
                                    std::size_t resolution);

/// Coincidence probability for an arbitrary unit-norm JSA on a symmetric grid:
///   p_c = 1/2 (1 - Re integral f(nu) conj(f(-nu)) e^{-i nu tau} d nu).
/// At tau = 0 with real f this equals the antisymmetric weight ||f_A||^2.
CoincidenceResult pc_general(const SpectralAmplitude& jsa, double tau);

/// Location and height of the strongest anti-bunching of the zero-delay beat.
struct AntibunchingPeak {
  double mu_star = 0.0;  // detuning of the maximum, rad/ps
  double p_star = 0.0;   // maximal coincidence probability
};

/// Numerically maximize pc_zero_delay over mu > 0.  The maximum sits at the
/// deepest minimum of sinc, mu*/zeta = 2.2467..., p* = 0.6086...
AntibunchingPeak peak_antibunching(double zeta);

}  // namespace hombeat
