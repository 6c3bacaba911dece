#pragma once

#include <vector>

#include "hombeat/interference.hpp"
#include "hombeat/spectral.hpp"

namespace hombeat {

/// Coincidence probability for two independent photons with spectral
/// amplitudes f and g meeting at the 50/50 beamsplitter with delay tau:
///   p_c = 1/2 - 1/2 | integral conj(f(nu)) g(nu) e^{i nu tau} d nu |^2.
/// The squared overlap equals the time-domain wave-packet correlation, so
/// p_c <= 1/2 always (Cauchy-Schwarz).  Both inputs must be unit-normalized
/// on the same grid.
CoincidenceResult pc_separable(const SpectralAmplitude& f, const SpectralAmplitude& g,
                               double tau);

/// One incoherent component of a mixed two-photon state.
struct MixtureComponent {
  double weight = 0.0;
  SpectralAmplitude f;
  SpectralAmplitude g;
};

/// Convex mixture of separable components: sum_i w_i pc_separable(f_i, g_i, tau).
/// Weights must be non-negative and sum to 1; the result is always <= 1/2.
CoincidenceResult pc_mixture(const std::vector<MixtureComponent>& components, double tau);

/// Outcome of the anti-bunching entanglement witness p_c > 1/2.
struct WitnessVerdict {
  bool entangled = false;
  double excess = 0.0;        // p_c - 1/2
  double significance = 0.0;  // excess / std_error
};

/// Decide the witness from a measured coincidence probability and its
/// standard error: entangled iff excess > 0 and excess/std_error >= k.
/// With std_error = 0 the decision reduces to p_c > 1/2.  Exceeding 1/2 is
/// sufficient for entanglement, never necessary.
WitnessVerdict witness(double p_c_estimate, double std_error, double k = 3.0);

}  // namespace hombeat
