#include "hombeat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hombeat {

double sinc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-6) {
    const double x2 = ax * ax;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(ax) / ax;
}

FrequencyGrid::FrequencyGrid(double start_, double step_, std::size_t count_)
    : start(start_), step(step_), count(count_) {
  if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(start))
    throw std::invalid_argument("FrequencyGrid: step must be positive and finite");
  if (count < 3 || count % 2 == 0)
    throw std::invalid_argument("FrequencyGrid: count must be odd and >= 3");
}

FrequencyGrid FrequencyGrid::symmetric(double half_span, std::size_t count) {
  if (!(half_span > 0.0))
    throw std::invalid_argument("FrequencyGrid::symmetric: half_span must be positive");
  if (count < 3 || count % 2 == 0)
    throw std::invalid_argument("FrequencyGrid::symmetric: count must be odd and >= 3");
  const double step = 2.0 * half_span / static_cast<double>(count - 1);
  const double start = -0.5 * static_cast<double>(count - 1) * step;
  return FrequencyGrid(start, step, count);
}

FrequencyGrid FrequencyGrid::default_for(double zeta) {
  if (!(zeta > 0.0))
    throw std::invalid_argument("FrequencyGrid::default_for: zeta must be positive");
  return symmetric(40.0 * zeta, 8193);
}

bool FrequencyGrid::is_symmetric() const {
  return start == -0.5 * static_cast<double>(count - 1) * step;
}

namespace {

void check_sizes(const SpectralAmplitude& f, const char* op) {
  if (f.values.size() != f.grid.count)
    throw std::invalid_argument(std::string(op) + ": value count does not match grid");
}

void check_finite(const SpectralAmplitude& f, const char* op) {
  for (const Complex& v : f.values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument(std::string(op) + ": non-finite amplitude value");
}

void require_symmetric_grid(const SpectralAmplitude& f, const char* op) {
  if (!f.grid.is_symmetric())
    throw std::invalid_argument(std::string(op) + ": grid is not symmetric about nu = 0");
}

}  // namespace

double l2_norm_squared(const SpectralAmplitude& f) {
  check_sizes(f, "l2_norm_squared");
  double sum = 0.0;
  for (const Complex& v : f.values) sum += std::norm(v);
  sum -= 0.5 * (std::norm(f.values.front()) + std::norm(f.values.back()));
  return sum * f.grid.step;
}

SpectralAmplitude make_sinc_jsa(double mu, double zeta, const FrequencyGrid& grid) {
  if (!(zeta > 0.0))
    throw std::invalid_argument("make_sinc_jsa: zeta must be positive");
  const double need_lo = mu - 20.0 * zeta;
  const double need_hi = mu + 20.0 * zeta;
  if (grid.min() > need_lo || grid.max() < need_hi) {
    std::ostringstream msg;
    msg << "make_sinc_jsa: grid [" << grid.min() << ", " << grid.max()
        << "] too narrow for mu = " << mu << ", zeta = " << zeta
        << "; need at least [" << need_lo << ", " << need_hi << "]";
    throw std::invalid_argument(msg.str());
  }
  SpectralAmplitude f{grid, std::vector<Complex>(grid.count)};
  for (std::size_t i = 0; i < grid.count; ++i)
    f.values[i] = sinc((grid.value(i) - mu) / zeta);
  return normalize(f);
}

SpectralAmplitude make_gaussian_spectrum(double center, double sigma,
                                         const FrequencyGrid& grid) {
  if (!(sigma > 0.0))
    throw std::invalid_argument("make_gaussian_spectrum: sigma must be positive");
  SpectralAmplitude f{grid, std::vector<Complex>(grid.count)};
  for (std::size_t i = 0; i < grid.count; ++i) {
    const double d = grid.value(i) - center;
    f.values[i] = std::exp(-d * d / (4.0 * sigma * sigma));
  }
  return normalize(f);
}

SpectralAmplitude normalize(const SpectralAmplitude& f) {
  check_sizes(f, "normalize");
  check_finite(f, "normalize");
  const double n2 = l2_norm_squared(f);
  if (!(n2 > 0.0))
    throw std::invalid_argument("normalize: amplitude has zero norm");
  const double inv = 1.0 / std::sqrt(n2);
  SpectralAmplitude out{f.grid, f.values};
  for (Complex& v : out.values) v *= inv;
  return out;
}

SpectralAmplitude exchange(const SpectralAmplitude& f) {
  check_sizes(f, "exchange");
  require_symmetric_grid(f, "exchange");
  SpectralAmplitude out{f.grid, std::vector<Complex>(f.values.rbegin(), f.values.rend())};
  return out;
}

SymmetrySplit symmetry_split(const SpectralAmplitude& f) {
  check_sizes(f, "symmetry_split");
  require_symmetric_grid(f, "symmetry_split");
  const std::size_t n = f.grid.count;
  SymmetrySplit out{{f.grid, std::vector<Complex>(n)}, {f.grid, std::vector<Complex>(n)}};
  for (std::size_t i = 0; i < n; ++i) {
    const Complex swapped = f.values[n - 1 - i];
    out.symmetric.values[i] = 0.5 * (f.values[i] + swapped);
    out.antisymmetric.values[i] = 0.5 * (f.values[i] - swapped);
  }
  return out;
}

Complex overlap(const SpectralAmplitude& f, const SpectralAmplitude& g) {
  check_sizes(f, "overlap");
  check_sizes(g, "overlap");
  if (!(f.grid == g.grid))
    throw std::invalid_argument("overlap: grids do not match");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    sum += std::conj(f.values[i]) * g.values[i];
  sum -= 0.5 * (std::conj(f.values.front()) * g.values.front() +
                std::conj(f.values.back()) * g.values.back());
  return sum * f.grid.step;
}

}  // namespace hombeat
