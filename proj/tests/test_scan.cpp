#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "hombeat/interference.hpp"
#include "hombeat/scan.hpp"

using namespace hombeat;

namespace {

ScanConfig basic_config() {
  ScanConfig cfg;
  cfg.zeta = 1.0;
  return cfg;
}

}  // namespace

TEST_CASE("axis validation and endpoints") {
  CHECK_THROWS_AS(AxisSpec(1.0, 1.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(AxisSpec(2.0, 1.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(AxisSpec(0.0, 1.0, 1), std::invalid_argument);
  const AxisSpec axis(-3.0, 3.0, 121);
  CHECK(axis.value(0) == -3.0);
  CHECK(axis.value(120) == 3.0);
}

TEST_CASE("delay scan: triangular dip at zero detuning") {
  auto cfg = basic_config();
  cfg.tau_axis = AxisSpec(-3.0, 3.0, 121);
  const auto rows = delay_scan(cfg, 0.0);
  REQUIRE(rows.size() == 121);
  double min_p = 1.0;
  std::size_t argmin = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK_FALSE(rows[i].counts.has_value());
    if (rows[i].expected_p_c < min_p) {
      min_p = rows[i].expected_p_c;
      argmin = i;
    }
  }
  CHECK(min_p < 1e-12);               // perfect bunching at tau = 0
  CHECK(std::abs(rows[argmin].tau_ps) < 1e-12);
  for (const auto& r : rows) CHECK(r.expected_p_c <= 0.5 + 1e-15);
}

TEST_CASE("delay scan: detuned beat exceeds one half on a frozen row count") {
  auto cfg = basic_config();
  cfg.tau_axis = AxisSpec(-3.0, 3.0, 121);
  const auto rows = delay_scan(cfg, 3.0);
  int above = 0;
  for (const auto& r : rows)
    if (r.expected_p_c > 0.5) ++above;
  // frozen by evaluating the closed form on this grid independently
  CHECK(above == 39);
}

TEST_CASE("delay scan outside the coherence window is flat at one half") {
  auto cfg = basic_config();
  cfg.tau_axis = AxisSpec(2.0, 8.0, 31);
  for (const auto& r : delay_scan(cfg, 1.7)) CHECK(r.expected_p_c == 0.5);
  cfg.tau_axis.reset();
  CHECK_THROWS_AS(delay_scan(cfg, 0.0), std::invalid_argument);
}

TEST_CASE("detuning scan: degeneracy temperature, flat outside coherence") {
  auto cfg = basic_config();
  cfg.temperature_axis = AxisSpec(28.0, 90.0, 621);
  cfg.calibration = DetuningCalibration::default_ppktp810();

  const auto rows = detuning_scan(cfg, 0.0);
  REQUIRE(rows.size() == 621);
  // row 212 sits at T = 49.2 where mu = 0
  CHECK(*rows[212].temperature_C == doctest::Approx(49.2).epsilon(1e-12));
  CHECK(rows[212].expected_p_c < 1e-9);

  double max_p = 0.0;
  for (const auto& r : rows) max_p = std::max(max_p, r.expected_p_c);
  CHECK(max_p > 0.5);  // beat rows exceed the random level

  const auto flat = detuning_scan(cfg, 3.0 / cfg.zeta);
  for (const auto& r : flat) CHECK(r.expected_p_c == 0.5);

  cfg.temperature_axis = AxisSpec(10.0, 90.0, 11);  // extends below the window
  CHECK_THROWS_AS(detuning_scan(cfg, 0.0), std::domain_error);
  cfg.temperature_axis = AxisSpec(28.0, 90.0, 11);
  cfg.calibration.reset();
  CHECK_THROWS_AS(detuning_scan(cfg, 0.0), std::invalid_argument);
}

TEST_CASE("detuning scan along a cooling trajectory is strictly decreasing in T") {
  auto cfg = basic_config();
  cfg.calibration = DetuningCalibration::default_ppktp810();
  cfg.temperature_axis = AxisSpec(28.0, 90.0, 11);  // unused by the overload

  std::vector<double> times;
  for (int i = 0; i <= 200; ++i) times.push_back(10.0 * i);
  const auto temps = cooling_trajectory(90.0, 28.0, 600.0, times);
  const auto rows = detuning_scan(cfg, 0.0, temps);
  REQUIRE(rows.size() == temps.size());
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(*rows[i].temperature_C < *rows[i - 1].temperature_C);
  // the scan sweeps through degeneracy on the way down
  CHECK(rows.front().mu_radps > 0.0);
  CHECK(rows.back().mu_radps < 0.0);
}

TEST_CASE("2D map: slices agree bit-exactly with the 1D scans") {
  auto cfg = basic_config();
  cfg.tau_axis = AxisSpec(-3.0, 3.0, 41);
  cfg.temperature_axis = AxisSpec(28.0, 90.0, 32);
  cfg.calibration = DetuningCalibration::default_ppktp810();
  const auto map = map2d(cfg);
  REQUIRE(map.p_c.size() == 41u * 32u);

  // each temperature row equals a delay scan at that row's detuning
  for (std::size_t it = 0; it < map.temperature_axis.steps; it += 7) {
    const auto row = delay_scan(cfg, map.mu_radps[it]);
    for (std::size_t jt = 0; jt < map.tau_axis.steps; ++jt)
      REQUIRE(map.at(it, jt) == row[jt].expected_p_c);
  }

  // each delay column equals a detuning scan at that delay
  for (std::size_t jt = 0; jt < map.tau_axis.steps; jt += 11) {
    const auto column = detuning_scan(cfg, map.tau_axis.value(jt));
    for (std::size_t it = 0; it < map.temperature_axis.steps; ++it)
      REQUIRE(map.at(it, jt) == column[it].expected_p_c);
  }

  // the column at tau = 0 is the zero-delay beat along mu(T)
  const std::size_t j_zero = 20;  // tau axis -3:3:41
  REQUIRE(std::abs(map.tau_axis.value(j_zero)) < 1e-15);
  for (std::size_t it = 0; it < map.temperature_axis.steps; ++it)
    CHECK(std::abs(map.at(it, j_zero) -
                   pc_zero_delay(map.mu_radps[it], cfg.zeta).p_c) <= 1e-12);
}

TEST_CASE("2D map is symmetric under tau reflection") {
  auto cfg = basic_config();
  cfg.tau_axis = AxisSpec(-3.0, 3.0, 81);
  cfg.temperature_axis = AxisSpec(28.0, 90.0, 81);
  cfg.calibration = DetuningCalibration::default_ppktp810();
  const auto map = map2d(cfg);
  for (std::size_t it = 0; it < 81; ++it)
    for (std::size_t jt = 0; jt < 81; ++jt)
      CHECK(std::abs(map.at(it, jt) - map.at(it, 80 - jt)) <= 1e-12);
}

TEST_CASE("2D map row at the degeneracy temperature matches the triangle") {
  auto cfg = basic_config();
  cfg.tau_axis = AxisSpec(-3.0, 3.0, 61);
  cfg.temperature_axis = AxisSpec(28.4, 70.0, 105);  // holds T = 49.2 (index 52)
  cfg.calibration = DetuningCalibration::default_ppktp810();
  const auto map = map2d(cfg);
  const std::size_t i_deg = 52;
  CHECK(map.temperature_axis.value(i_deg) == doctest::Approx(49.2).epsilon(1e-12));
  for (std::size_t jt = 0; jt < map.tau_axis.steps; ++jt) {
    const double triangle = pc_degenerate(map.tau_axis.value(jt), cfg.zeta).p_c;
    CHECK(std::abs(map.at(i_deg, jt) - triangle) < 1e-12);
  }
}

TEST_CASE("counting parameters validate") {
  CountingParams params;
  params.pair_rate_hz = -1.0;
  CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  params = CountingParams{};
  params.dwell_time_s = 0.0;
  CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  params = CountingParams{};
  params.accidental_rate_hz = -0.5;
  CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  CHECK(CountingParams{}.coincidence_window_ns == 4.4);
}

TEST_CASE("count simulation: empty source, determinism") {
  CountingParams params;
  params.pair_rate_hz = 0.0;
  params.accidental_rate_hz = 0.0;
  params.rng_seed = 7;
  CHECK(simulate_counts(0.3, params) == std::pair<std::uint64_t, std::uint64_t>{0, 0});

  params.pair_rate_hz = 1e4;
  const auto first = simulate_counts(0.3, params);
  const auto second = simulate_counts(0.3, params);
  CHECK(first == second);
  params.rng_seed = 8;
  CHECK(simulate_counts(0.3, params) != first);
}

TEST_CASE("count simulation approaches the expected ratio at large dwell") {
  // p_c = 0.5 makes raw and baseline identically distributed: the mean ratio
  // over seeds must sit within 3 pooled standard errors of 1.
  CountingParams params;
  params.pair_rate_hz = 1e5;
  params.dwell_time_s = 1.0;
  double ratio_sum = 0.0, var_sum = 0.0;
  const int runs = 100;
  for (int s = 0; s < runs; ++s) {
    params.rng_seed = 1000 + s;
    const auto [raw, baseline] = simulate_counts(0.5, params);
    REQUIRE(baseline > 0);
    const double ratio = static_cast<double>(raw) / static_cast<double>(baseline);
    ratio_sum += ratio;
    var_sum += ratio * ratio * (1.0 / raw + 1.0 / baseline);
  }
  const double mean = ratio_sum / runs;
  const double pooled = std::sqrt(var_sum) / runs;
  CHECK(std::abs(mean - 1.0) < 3.0 * pooled);
}

TEST_CASE("poisson sampler: moments and edge cases") {
  std::mt19937_64 rng(42);
  CHECK(poisson_sample(rng, 0.0) == 0);
  CHECK_THROWS_AS(poisson_sample(rng, -1.0), std::invalid_argument);

  const double lambda = 12.5;
  const int draws = 20000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double k = static_cast<double>(poisson_sample(rng, lambda));
    sum += k;
    sq += k * k;
  }
  const double mean = sum / draws;
  const double var = sq / draws - mean * mean;
  CHECK(mean == doctest::Approx(lambda).epsilon(0.02));
  CHECK(var == doctest::Approx(lambda).epsilon(0.08));
}

TEST_CASE("count normalization: baseline convention and the error guard") {
  CHECK(normalize_counts(1000, 1000).first == 0.5);
  CHECK(normalize_counts(0, 1000).first == 0.0);
  const auto [p0, se0] = normalize_counts(0, 1000);
  CHECK(se0 == doctest::Approx(0.5 * (1.0 / 1000.0) * std::sqrt(1.0 + 1.0 / 1000.0))
                   .epsilon(1e-15));
  // ratio 1.186 reproduces the 0.593 arithmetic
  CHECK(normalize_counts(1186, 1000).first == doctest::Approx(0.593).epsilon(1e-15));
  CHECK_THROWS_AS(normalize_counts(5, 0), std::domain_error);
}

TEST_CASE("stochastic rows are reproducible and order-independent per point") {
  auto cfg = basic_config();
  cfg.tau_axis = AxisSpec(-2.0, 2.0, 41);
  CountingParams params;
  params.pair_rate_hz = 1e4;
  params.rng_seed = 99;
  cfg.counting = params;

  const auto rows1 = delay_scan(cfg, 1.0);
  const auto rows2 = delay_scan(cfg, 1.0);
  REQUIRE(rows1.size() == rows2.size());
  for (std::size_t i = 0; i < rows1.size(); ++i) {
    REQUIRE(rows1[i].counts.has_value());
    CHECK(rows1[i].counts->raw == rows2[i].counts->raw);
    CHECK(rows1[i].counts->baseline == rows2[i].counts->baseline);
  }

  // a single point re-simulated with seed + index reproduces its row
  CountingParams point = params;
  point.rng_seed = params.rng_seed + 17;
  const auto [raw, baseline] = simulate_counts(rows1[17].expected_p_c, point);
  CHECK(raw == rows1[17].counts->raw);
  CHECK(baseline == rows1[17].counts->baseline);
}

TEST_CASE("normalized estimates track the closed form across 200 seeded runs") {
  const double zeta = 1.0;
  const double mu_star = peak_antibunching(zeta).mu_star;
  const double expected = pc_analytic(0.0, mu_star, zeta).p_c;

  CountingParams params;
  params.pair_rate_hz = 1e5;
  params.dwell_time_s = 1.0;
  double sum = 0.0, var_sum = 0.0;
  const int runs = 200;
  for (int s = 0; s < runs; ++s) {
    params.rng_seed = 5000 + s;
    const auto [raw, baseline] = simulate_counts(expected, params);
    const auto [p_hat, se] = normalize_counts(raw, baseline);
    sum += p_hat;
    var_sum += se * se;
  }
  const double mean = sum / runs;
  const double pooled = std::sqrt(var_sum) / runs;
  CHECK(std::abs(mean - expected) < 3.0 * pooled);
}
