#include "hombeat/scan.hpp"

#include <cmath>
#include <stdexcept>

#include "hombeat/interference.hpp"

namespace hombeat {

AxisSpec::AxisSpec(double start_, double stop_, std::size_t steps_)
    : start(start_), stop(stop_), steps(steps_) {
  if (!(start < stop))
    throw std::invalid_argument("AxisSpec: start must be below stop");
  if (steps < 2) throw std::invalid_argument("AxisSpec: need at least 2 steps");
}

void CountingParams::validate() const {
  if (!(pair_rate_hz >= 0.0))
    throw std::invalid_argument("CountingParams: pair rate must be >= 0");
  if (!(accidental_rate_hz >= 0.0))
    throw std::invalid_argument("CountingParams: accidental rate must be >= 0");
  if (!(dwell_time_s > 0.0))
    throw std::invalid_argument("CountingParams: dwell time must be positive");
  if (!(coincidence_window_ns >= 0.0))
    throw std::invalid_argument("CountingParams: coincidence window must be >= 0");
}

namespace {

std::optional<Counts> maybe_count(const ScanConfig& cfg, double expected_p_c,
                                  std::size_t point_index) {
  if (!cfg.counting) return std::nullopt;
  CountingParams params = *cfg.counting;
  params.rng_seed += point_index;  // per-point stream, order-independent
  const auto [raw, baseline] = simulate_counts(expected_p_c, params);
  const auto [p_hat, std_error] = normalize_counts(raw, baseline);
  return Counts{raw, baseline, p_hat, std_error};
}

}  // namespace

std::vector<CountRecord> delay_scan(const ScanConfig& cfg, double mu) {
  if (!cfg.tau_axis) throw std::invalid_argument("delay_scan: tau axis not defined");
  if (cfg.counting) cfg.counting->validate();
  std::vector<CountRecord> rows;
  rows.reserve(cfg.tau_axis->steps);
  for (std::size_t i = 0; i < cfg.tau_axis->steps; ++i) {
    const double tau = cfg.tau_axis->value(i);
    const double p = pc_analytic(tau, mu, cfg.zeta).p_c;
    rows.push_back({tau, std::nullopt, mu, p, maybe_count(cfg, p, i)});
  }
  return rows;
}

std::vector<CountRecord> detuning_scan(const ScanConfig& cfg, double tau) {
  if (!cfg.temperature_axis)
    throw std::invalid_argument("detuning_scan: temperature axis not defined");
  std::vector<double> temperatures;
  temperatures.reserve(cfg.temperature_axis->steps);
  for (std::size_t i = 0; i < cfg.temperature_axis->steps; ++i)
    temperatures.push_back(cfg.temperature_axis->value(i));
  return detuning_scan(cfg, tau, temperatures);
}

std::vector<CountRecord> detuning_scan(const ScanConfig& cfg, double tau,
                                       const std::vector<double>& temperatures_C) {
  if (!cfg.calibration)
    throw std::invalid_argument("detuning_scan: no detuning calibration");
  if (cfg.counting) cfg.counting->validate();
  std::vector<CountRecord> rows;
  rows.reserve(temperatures_C.size());
  for (std::size_t i = 0; i < temperatures_C.size(); ++i) {
    const double T = temperatures_C[i];
    const double mu = mu_of_temperature(T, *cfg.calibration);
    const double p = pc_analytic(tau, mu, cfg.zeta).p_c;
    rows.push_back({tau, T, mu, p, maybe_count(cfg, p, i)});
  }
  return rows;
}

Map2d map2d(const ScanConfig& cfg) {
  if (!cfg.tau_axis || !cfg.temperature_axis)
    throw std::invalid_argument("map2d: both axes must be defined");
  if (!cfg.calibration) throw std::invalid_argument("map2d: no detuning calibration");
  Map2d map{*cfg.tau_axis, *cfg.temperature_axis, {}, {}};
  map.mu_radps.reserve(map.temperature_axis.steps);
  map.p_c.reserve(map.temperature_axis.steps * map.tau_axis.steps);
  for (std::size_t it = 0; it < map.temperature_axis.steps; ++it) {
    const double T = map.temperature_axis.value(it);
    const double mu = mu_of_temperature(T, *cfg.calibration);
    map.mu_radps.push_back(mu);
    for (std::size_t jt = 0; jt < map.tau_axis.steps; ++jt)
      map.p_c.push_back(pc_analytic(map.tau_axis.value(jt), mu, cfg.zeta).p_c);
  }
  return map;
}

std::uint64_t poisson_sample(std::mt19937_64& rng, double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean))
    throw std::invalid_argument("poisson_sample: mean must be finite and >= 0");
  if (mean == 0.0) return 0;
  // Count unit-rate arrivals inside [0, mean): a sum of Exp(1) gaps.
  double elapsed = 0.0;
  std::uint64_t k = 0;
  while (true) {
    const double u =
        (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    elapsed += -std::log(u);
    if (elapsed >= mean) return k;
    ++k;
  }
}

std::pair<std::uint64_t, std::uint64_t> simulate_counts(double expected_p_c,
                                                        const CountingParams& params) {
  params.validate();
  if (!(expected_p_c >= 0.0) || !(expected_p_c <= 1.0))
    throw std::invalid_argument("simulate_counts: expected p_c outside [0, 1]");
  const double per_dwell = params.pair_rate_hz * params.dwell_time_s;
  const double accidentals = params.accidental_rate_hz * params.dwell_time_s;
  std::mt19937_64 rng(params.rng_seed);
  const std::uint64_t raw = poisson_sample(rng, per_dwell * expected_p_c + accidentals);
  const std::uint64_t baseline = poisson_sample(rng, per_dwell * 0.5 + accidentals);
  return {raw, baseline};
}

std::pair<double, double> normalize_counts(std::uint64_t raw, std::uint64_t baseline) {
  if (baseline == 0)
    throw std::domain_error("normalize_counts: baseline count is zero");
  const double b = static_cast<double>(baseline);
  const double p_hat = 0.5 * static_cast<double>(raw) / b;
  const double guarded = static_cast<double>(raw == 0 ? 1 : raw);
  const double std_error =
      0.5 * (guarded / b) * std::sqrt(1.0 / guarded + 1.0 / b);
  return {p_hat, std_error};
}

}  // namespace hombeat
