#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "hombeat/dispersion.hpp"

namespace hombeat {

/// Inclusive sweep start..stop with `steps` evenly spaced points.
struct AxisSpec {
  double start = 0.0;
  double stop = 0.0;
  std::size_t steps = 0;

  AxisSpec(double start, double stop, std::size_t steps);

  double value(std::size_t i) const {
    return start + (stop - start) / static_cast<double>(steps - 1) *
                       static_cast<double>(i);
  }
};

/// Stochastic photon-counting emulation.  Coincidences per dwell are
/// pair_rate * dwell * p_c plus accidental_rate * dwell; the coincidence
/// window is stored so an accidental rate can be derived from singles rates
/// (accidentals = singles1 * singles2 * window) but is not applied itself.
struct CountingParams {
  double pair_rate_hz = 0.0;
  double dwell_time_s = 1.0;
  double coincidence_window_ns = 4.4;
  double accidental_rate_hz = 0.0;
  std::uint64_t rng_seed = 0;

  void validate() const;
};

struct ScanConfig {
  std::optional<AxisSpec> tau_axis;          // ps
  std::optional<AxisSpec> temperature_axis;  // degC
  double zeta = 0.0;                         // rad/ps
  std::optional<DetuningCalibration> calibration;
  std::optional<CountingParams> counting;
};

struct Counts {
  std::uint64_t raw = 0;
  std::uint64_t baseline = 0;
  double p_hat = 0.0;
  double std_error = 0.0;
};

struct CountRecord {
  double tau_ps = 0.0;
  std::optional<double> temperature_C;
  double mu_radps = 0.0;
  double expected_p_c = 0.0;
  std::optional<Counts> counts;
};

/// Delay sweep at fixed detuning mu.  With counting enabled each point draws
/// counts from its own generator seeded with rng_seed + point index, so the
/// record is reproducible and independent of evaluation order.
std::vector<CountRecord> delay_scan(const ScanConfig& cfg, double mu);

/// Temperature sweep at fixed delay, mu taken from the calibration.
std::vector<CountRecord> detuning_scan(const ScanConfig& cfg, double tau);

/// Temperature-scan variant driven by an explicit temperature sequence,
/// e.g. a cooling trajectory; rows keep the given order.
std::vector<CountRecord> detuning_scan(const ScanConfig& cfg, double tau,
                                       const std::vector<double>& temperatures_C);

/// Dense map of p_c over delay and temperature.
struct Map2d {
  AxisSpec tau_axis;
  AxisSpec temperature_axis;
  std::vector<double> mu_radps;  // per temperature row
  std::vector<double> p_c;       // row-major, [i_T * tau_steps + i_tau]

  double at(std::size_t i_temperature, std::size_t i_tau) const {
    return p_c[i_temperature * tau_axis.steps + i_tau];
  }
};
Map2d map2d(const ScanConfig& cfg);

/// Portable Poisson sampler (exponential-race method) on top of the
/// standard-pinned mt19937_64 stream; identical seeds give identical counts
/// on any platform with the same floating-point libm.
std::uint64_t poisson_sample(std::mt19937_64& rng, double mean);

/// Draw (raw, baseline) coincidence counts for one scan point.  The baseline
/// is the rate observed outside the photon coherence length, where p_c = 1/2.
std::pair<std::uint64_t, std::uint64_t> simulate_counts(double expected_p_c,
                                                        const CountingParams& params);

/// Normalize raw counts to the p_c = 1/2 baseline: p_hat = raw / (2 baseline),
/// std_error by first-order Poisson propagation (raw clamped to >= 1 inside
/// the error formula so it stays finite).  No background subtraction.
std::pair<double, double> normalize_counts(std::uint64_t raw, std::uint64_t baseline);

}  // namespace hombeat
