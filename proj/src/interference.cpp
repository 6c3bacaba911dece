#include "hombeat/interference.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hombeat {

namespace {

void require_positive_zeta(double zeta, const char* op) {
  if (!(zeta > 0.0) || !std::isfinite(zeta))
    throw std::invalid_argument(std::string(op) + ": zeta must be positive");
}

void require_finite(double value, const char* op, const char* name) {
  if (!std::isfinite(value))
    throw std::invalid_argument(std::string(op) + ": " + name + " must be finite");
}

// sin(x a) / (2 x) for a in [0, 2], with the mu -> 0 limit a/2 taken by
// series below |x| = 1e-8 so the closed form stays smooth across mu = 0.
double beat_term(double abs_x, double a) {
  if (abs_x < 1e-8) {
    const double xa = abs_x * a;
    return 0.5 * a * (1.0 - xa * xa / 6.0);
  }
  return std::sin(abs_x * a) / (2.0 * abs_x);
}

// Guard the [0, 1] range against rounding; anything beyond rounding noise
// indicates a genuine math error and must not be silently clipped.
double clamp_probability(double p, const char* op) {
  if (p < -1e-9 || p > 1.0 + 1e-9)
    throw std::logic_error(std::string(op) + ": probability escaped [0, 1]");
  return std::min(1.0, std::max(0.0, p));
}

}  // namespace

DelayParams::DelayParams(double tau, double t_window)
    : tau_ps(tau), t_window_ps(t_window) {
  if (!std::isfinite(tau))
    throw std::invalid_argument("DelayParams: tau must be finite");
  if (!(t_window > 0.0) || !std::isfinite(t_window))
    throw std::invalid_argument("DelayParams: t_window must be positive");
}

CoincidenceResult pc_analytic(double tau, double mu, double zeta) {
  require_positive_zeta(zeta, "pc_analytic");
  require_finite(tau, "pc_analytic", "tau");
  require_finite(mu, "pc_analytic", "mu");
  const double abs_tau = std::abs(tau);
  if (abs_tau >= 2.0 / zeta) return {0.5, Method::analytic, 0.0};
  const double a = 2.0 - zeta * abs_tau;
  const double p = 0.5 * (1.0 - beat_term(std::abs(mu) / zeta, a));
  return {p, Method::analytic, 0.0};
}

CoincidenceResult pc_degenerate(double tau, double zeta) {
  require_positive_zeta(zeta, "pc_degenerate");
  require_finite(tau, "pc_degenerate", "tau");
  const double u = std::abs(0.5 * tau * zeta);
  const double tri = u < 1.0 ? 1.0 - u : 0.0;
  return {0.5 * (1.0 - tri), Method::degenerate, 0.0};
}

CoincidenceResult pc_zero_delay(double mu, double zeta) {
  require_positive_zeta(zeta, "pc_zero_delay");
  require_finite(mu, "pc_zero_delay", "mu");
  const double p = 0.5 * (1.0 - beat_term(std::abs(mu) / zeta, 2.0));
  return {p, Method::zero_delay, 0.0};
}

Complex amplitude_oracle(double t, double tau, double mu, double zeta) {
  require_positive_zeta(zeta, "amplitude_oracle");
  require_finite(t, "amplitude_oracle", "t");
  require_finite(tau, "amplitude_oracle", "tau");
  require_finite(mu, "amplitude_oracle", "mu");
  const auto rect = [](double x) { return std::abs(x) <= 0.5 ? 1.0 : 0.0; };
  const Complex first = std::polar(rect(0.5 * t * zeta), mu * t);
  const Complex second = std::polar(rect(0.5 * (t + tau) * zeta), -mu * (t + tau));
  return 0.5 * (first - second);
}

namespace {

// Integrate |A(t; tau)|^2 over [lo, hi] splitting at the four window edges,
// so the trapezoid rule only ever sees a smooth integrand.  Which windows are
// open on a piece is decided at its midpoint; the edges themselves have
// measure zero.
double windowed_intensity_integral(double tau, double mu, double zeta,
                                   std::size_t resolution, double lo, double hi) {
  const double half = 1.0 / zeta;
  std::array<double, 6> edges = {lo, -half, half, -half - tau, half - tau, hi};
  std::sort(edges.begin(), edges.end());

  const double total = hi - lo;
  double integral = 0.0;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    const double a = std::max(lo, edges[k]);
    const double b = std::min(hi, edges[k + 1]);
    if (!(b > a)) continue;
    const double mid = 0.5 * (a + b);
    const bool open1 = std::abs(mid) <= half;
    const bool open2 = std::abs(mid + tau) <= half;
    if (!open1 && !open2) continue;

    const std::size_t nodes = std::max<std::size_t>(
        9, static_cast<std::size_t>(
               std::llround(static_cast<double>(resolution) * (b - a) / total)));
    const double h = (b - a) / static_cast<double>(nodes - 1);
    double piece = 0.0;
    for (std::size_t i = 0; i < nodes; ++i) {
      const double t = a + h * static_cast<double>(i);
      Complex amp = 0.0;
      if (open1) amp += std::polar(1.0, mu * t);
      if (open2) amp -= std::polar(1.0, -mu * (t + tau));
      const double w = (i == 0 || i == nodes - 1) ? 0.5 : 1.0;
      piece += w * 0.25 * std::norm(amp);
    }
    integral += piece * h;
  }
  return integral;
}

CoincidenceResult oracle_impl(double tau, double mu, double zeta,
                              std::size_t resolution, double lo, double hi) {
  if (resolution < 1001)
    throw std::invalid_argument("pc_numeric_oracle: resolution must be >= 1001");
  const double norm = 0.5 * zeta;  // A0, fixed by p_c -> 1/2 at large |tau|
  const double fine = norm * windowed_intensity_integral(tau, mu, zeta, resolution, lo, hi);
  const double coarse =
      norm * windowed_intensity_integral(tau, mu, zeta, resolution / 2, lo, hi);
  const double err = std::abs(fine - coarse) / 3.0;
  return {clamp_probability(fine, "pc_numeric_oracle"), Method::oracle, err};
}

}  // namespace

CoincidenceResult pc_numeric_oracle(double tau, double mu, double zeta,
                                    std::size_t resolution) {
  require_positive_zeta(zeta, "pc_numeric_oracle");
  require_finite(tau, "pc_numeric_oracle", "tau");
  require_finite(mu, "pc_numeric_oracle", "mu");
  const double half = 1.0 / zeta;
  const double lo = std::min(-half, -half - tau);
  const double hi = std::max(half, half - tau);
  return oracle_impl(tau, mu, zeta, resolution, lo, hi);
}

CoincidenceResult pc_numeric_oracle(const DelayParams& delay, double mu, double zeta,
                                    std::size_t resolution) {
  require_positive_zeta(zeta, "pc_numeric_oracle");
  const double half = 1.0 / zeta;
  const double lo = std::min(-half, -half - delay.tau_ps);
  const double hi = std::max(half, half - delay.tau_ps);
  if (-delay.t_window_ps > lo || delay.t_window_ps < hi)
    throw std::invalid_argument(
        "pc_numeric_oracle: t_window does not cover both amplitude windows");
  return oracle_impl(delay.tau_ps, mu, zeta, resolution, -delay.t_window_ps,
                     delay.t_window_ps);
}

namespace {

// Re sum_i w_i f_i conj(f_rev(i)) e^{-i nu_i tau} over every stride-th grid
// point, trapezoid weights.  The delay phasor advances by recurrence with a
// periodic exact resync to keep rounding drift negligible on long grids.
double exchange_cross_term(const SpectralAmplitude& f, double tau, std::size_t stride) {
  const std::size_t n = f.grid.count;
  const std::size_t m = (n - 1) / stride + 1;  // points visited
  const double h = f.grid.step * static_cast<double>(stride);

  const Complex rot = std::polar(1.0, -f.grid.step * static_cast<double>(stride) * tau);
  Complex phasor = std::polar(1.0, -f.grid.start * tau);
  Complex sum = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t i = j * stride;
    if ((j & 0xfffu) == 0)
      phasor = std::polar(1.0, -f.grid.value(i) * tau);
    const double w = (j == 0 || j == m - 1) ? 0.5 : 1.0;
    sum += w * f.values[i] * std::conj(f.values[n - 1 - i]) * phasor;
    phasor *= rot;
  }
  return (sum * h).real();
}

}  // namespace

CoincidenceResult pc_general(const SpectralAmplitude& jsa, double tau) {
  require_finite(tau, "pc_general", "tau");
  if (jsa.values.size() != jsa.grid.count)
    throw std::invalid_argument("pc_general: value count does not match grid");
  if (!jsa.grid.is_symmetric())
    throw std::invalid_argument("pc_general: grid is not symmetric about nu = 0");
  const double n2 = l2_norm_squared(jsa);
  if (std::abs(n2 - 1.0) > 1e-6)
    throw std::invalid_argument("pc_general: JSA is not unit-normalized");

  const double p = 0.5 * (1.0 - exchange_cross_term(jsa, tau, 1));
  const double p_coarse = 0.5 * (1.0 - exchange_cross_term(jsa, tau, 2));
  const double err = std::abs(p - p_coarse) / 3.0;
  return {clamp_probability(p, "pc_general"), Method::general, err};
}

AntibunchingPeak peak_antibunching(double zeta) {
  require_positive_zeta(zeta, "peak_antibunching");
  // Maximize 1/2 (1 - sinc(x)) in x = 2 mu / zeta.  The global maximum is at
  // the deepest sinc minimum; locate it by coarse scan + golden-section.
  const double x_hi = 4.0 * std::numbers::pi;
  double best_x = 0.0, best = 1.0;  // minimizing sinc
  for (int i = 1; i <= 4000; ++i) {
    const double x = x_hi * static_cast<double>(i) / 4000.0;
    const double s = sinc(x);
    if (s < best) {
      best = s;
      best_x = x;
    }
  }
  double a = best_x - x_hi / 4000.0;
  double b = best_x + x_hi / 4000.0;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = sinc(c), fd = sinc(d);
  while (b - a > 1e-13) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = sinc(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = sinc(d);
    }
  }
  const double x_star = 0.5 * (a + b);
  return {0.5 * zeta * x_star, 0.5 * (1.0 - sinc(x_star))};
}

}  // namespace hombeat
