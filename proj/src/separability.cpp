#include "hombeat/separability.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hombeat {

namespace {

// sum_i w_i conj(f_i) g_i e^{+i nu_i tau} over every stride-th point,
// trapezoid weights; phasor recurrence with periodic exact resync.
Complex delayed_overlap(const SpectralAmplitude& f, const SpectralAmplitude& g,
                        double tau, std::size_t stride) {
  const std::size_t n = f.grid.count;
  const std::size_t m = (n - 1) / stride + 1;
  const double h = f.grid.step * static_cast<double>(stride);

  const Complex rot = std::polar(1.0, f.grid.step * static_cast<double>(stride) * tau);
  Complex phasor = std::polar(1.0, f.grid.start * tau);
  Complex sum = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t i = j * stride;
    if ((j & 0xfffu) == 0)
      phasor = std::polar(1.0, f.grid.value(i) * tau);
    const double w = (j == 0 || j == m - 1) ? 0.5 : 1.0;
    sum += w * std::conj(f.values[i]) * g.values[i] * phasor;
    phasor *= rot;
  }
  return sum * h;
}

void check_normalized_pair(const SpectralAmplitude& f, const SpectralAmplitude& g,
                           const char* op) {
  if (f.values.size() != f.grid.count || g.values.size() != g.grid.count)
    throw std::invalid_argument(std::string(op) + ": value count does not match grid");
  if (!(f.grid == g.grid))
    throw std::invalid_argument(std::string(op) + ": spectra live on different grids");
  if (std::abs(l2_norm_squared(f) - 1.0) > 1e-6 ||
      std::abs(l2_norm_squared(g) - 1.0) > 1e-6)
    throw std::invalid_argument(std::string(op) + ": spectra must be unit-normalized");
}

}  // namespace

CoincidenceResult pc_separable(const SpectralAmplitude& f, const SpectralAmplitude& g,
                               double tau) {
  if (!std::isfinite(tau))
    throw std::invalid_argument("pc_separable: tau must be finite");
  check_normalized_pair(f, g, "pc_separable");
  const double k2 = std::norm(delayed_overlap(f, g, tau, 1));
  const double k2_coarse = std::norm(delayed_overlap(f, g, tau, 2));
  const double p = 0.5 - 0.5 * k2;
  const double err = std::abs(k2 - k2_coarse) / 6.0;  // Richardson on |K|^2, halved
  if (p < -1e-9)
    throw std::logic_error("pc_separable: probability escaped [0, 1/2]");
  return {std::max(0.0, p), Method::separable, err};
}

CoincidenceResult pc_mixture(const std::vector<MixtureComponent>& components,
                             double tau) {
  if (components.empty())
    throw std::invalid_argument("pc_mixture: empty component list");
  double weight_sum = 0.0;
  for (const auto& c : components) {
    if (!(c.weight >= 0.0))
      throw std::invalid_argument("pc_mixture: weights must be non-negative");
    weight_sum += c.weight;
  }
  if (std::abs(weight_sum - 1.0) > 1e-9)
    throw std::invalid_argument("pc_mixture: weights must sum to 1");

  double p = 0.0;
  double err = 0.0;
  for (const auto& c : components) {
    const CoincidenceResult r = pc_separable(c.f, c.g, tau);
    p += c.weight * r.p_c;
    err += c.weight * r.numeric_error;
  }
  return {p, Method::separable, err};
}

WitnessVerdict witness(double p_c_estimate, double std_error, double k) {
  if (!(p_c_estimate >= 0.0) || !(p_c_estimate <= 1.0))
    throw std::invalid_argument("witness: p_c estimate outside [0, 1]");
  if (!(std_error >= 0.0))
    throw std::invalid_argument("witness: standard error must be non-negative");
  const double excess = p_c_estimate - 0.5;
  double significance;
  if (std_error > 0.0) {
    significance = excess / std_error;
  } else if (excess > 0.0) {
    significance = std::numeric_limits<double>::infinity();
  } else if (excess < 0.0) {
    significance = -std::numeric_limits<double>::infinity();
  } else {
    significance = 0.0;
  }
  const bool entangled = excess > 0.0 && significance >= k;
  return {entangled, excess, significance};
}

}  // namespace hombeat
