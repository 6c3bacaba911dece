#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hombeat {

using Complex = std::complex<double>;

/// sin(x)/x with the removable singularity handled by a short series
/// below |x| = 1e-6.  Even in x by construction.
double sinc(double x);

/// Uniform grid of difference frequencies nu (rad/ps).
///
/// Exchange operations (nu -> -nu) additionally require the grid to be
/// symmetric about zero, which with an odd point count puts nu = 0 on
/// the grid.  Use FrequencyGrid::symmetric() to build such grids.
struct FrequencyGrid {
  double start = 0.0;       // first grid point, rad/ps
  double step = 0.0;        // spacing, rad/ps, > 0
  std::size_t count = 0;    // number of points, odd, >= 3

  FrequencyGrid(double start, double step, std::size_t count);

  /// Grid spanning [-half_span, +half_span] with `count` points.
  static FrequencyGrid symmetric(double half_span, std::size_t count);

  /// Documented default working grid: 8193 points spanning +-40 zeta.
  /// Wide enough for any |mu| <= 20 zeta; overlap quadrature on it is
  /// limited by the truncated sinc tails to roughly the 1e-3 level, so
  /// tolerance-critical cross checks should use wider grids.
  static FrequencyGrid default_for(double zeta);

  double value(std::size_t i) const { return start + step * static_cast<double>(i); }
  double min() const { return start; }
  double max() const { return value(count - 1); }

  /// True when start == -(count-1)/2 * step, i.e. nu = 0 is the center point.
  bool is_symmetric() const;

  bool operator==(const FrequencyGrid&) const = default;
};

/// Sampled complex spectral amplitude over a FrequencyGrid.
/// Quadrature throughout is the composite trapezoid rule on the grid.
struct SpectralAmplitude {
  FrequencyGrid grid;
  std::vector<Complex> values;
};

/// Trapezoid-rule L2 norm squared, integral of |f|^2 d nu.
double l2_norm_squared(const SpectralAmplitude& f);

/// Two-photon spectral amplitude proportional to sinc((nu - mu)/zeta),
/// normalized to unit L2 norm on the grid.  The grid must span at least
/// [mu - 20 zeta, mu + 20 zeta] so the truncated sinc tails are small.
SpectralAmplitude make_sinc_jsa(double mu, double zeta, const FrequencyGrid& grid);

/// Normalized Gaussian amplitude exp(-(nu-center)^2 / (4 sigma^2)).
SpectralAmplitude make_gaussian_spectrum(double center, double sigma,
                                         const FrequencyGrid& grid);

/// Rescale to unit L2 norm.  Rejects all-zero or non-finite input.
SpectralAmplitude normalize(const SpectralAmplitude& f);

/// Frequency exchange g(nu) = f(-nu); requires a symmetric grid.
/// An involution: exchange(exchange(f)) == f bit-exactly.
SpectralAmplitude exchange(const SpectralAmplitude& f);

/// Even/odd decomposition under exchange.  Both parts are UNNORMALIZED:
/// symmetric + antisymmetric == f and the squared norms add up to ||f||^2.
struct SymmetrySplit {
  SpectralAmplitude symmetric;      // (f + exchange(f)) / 2
  SpectralAmplitude antisymmetric;  // (f - exchange(f)) / 2
};
SymmetrySplit symmetry_split(const SpectralAmplitude& f);

/// Inner product <f|g> = integral conj(f) g d nu (trapezoid weights).
/// Grids must match exactly.
Complex overlap(const SpectralAmplitude& f, const SpectralAmplitude& g);

}  // namespace hombeat
