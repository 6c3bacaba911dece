#include "hombeat/dispersion.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hombeat {

void CrystalParams::validate() const {
  if (!(length_mm > 0.0))
    throw std::invalid_argument("CrystalParams: crystal length must be positive");
  if (group_slope_a_ps_per_mm == group_slope_b_ps_per_mm)
    throw std::invalid_argument(
        "CrystalParams: group slopes k_a' and k_b' must differ (zeta diverges)");
  if (!(poling_period_um > 0.0))
    throw std::invalid_argument("CrystalParams: poling period must be positive");
  if (!(pump_frequency_radps > 0.0))
    throw std::invalid_argument("CrystalParams: pump frequency must be positive");
}

double zeta_from_crystal(const CrystalParams& p) {
  p.validate();
  return std::abs(4.0 / (p.length_mm *
                         (p.group_slope_a_ps_per_mm - p.group_slope_b_ps_per_mm)));
}

double zeta_from_bandwidth(double delta_omega) {
  if (!(delta_omega > 0.0))
    throw std::invalid_argument("zeta_from_bandwidth: bandwidth must be positive");
  return 2.0 * delta_omega / std::numbers::pi;
}

DetuningCalibration::DetuningCalibration(std::vector<Anchor> anchors,
                                         double degenerate_temperature_C)
    : anchors_(std::move(anchors)), degenerate_temperature_C_(degenerate_temperature_C) {
  if (anchors_.size() < 2)
    throw std::invalid_argument("DetuningCalibration: need at least 2 anchors");
  for (std::size_t i = 1; i < anchors_.size(); ++i)
    if (!(anchors_[i].temperature_C > anchors_[i - 1].temperature_C))
      throw std::invalid_argument(
          "DetuningCalibration: anchor temperatures must be strictly increasing");

  // Newton divided differences through all anchors.
  const std::size_t n = anchors_.size();
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = anchors_[i].mu_radps;
  newton_coeffs_.resize(n);
  newton_coeffs_[0] = d[0];
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i)
      d[i] = (d[i] - d[i - 1]) /
             (anchors_[i].temperature_C - anchors_[i - level].temperature_C);
    newton_coeffs_[level] = d[level];
  }

  if (degenerate_temperature_C_ < anchors_.front().temperature_C - 10.0 ||
      degenerate_temperature_C_ > anchors_.back().temperature_C + 10.0)
    throw std::invalid_argument(
        "DetuningCalibration: degenerate temperature outside anchor range");
  if (std::abs(mu_of_temperature(degenerate_temperature_C_, *this)) > 1e-9)
    throw std::invalid_argument(
        "DetuningCalibration: mu(degenerate temperature) is not zero within 1e-9");
}

DetuningCalibration DetuningCalibration::default_ppktp810() {
  return DetuningCalibration({{28.0, -25.4}, {49.2, 0.0}, {90.0, 42.2}}, 49.2);
}

double mu_of_temperature(double temperature_C, const DetuningCalibration& cal) {
  if (temperature_C < cal.min_temperature() || temperature_C > cal.max_temperature()) {
    std::ostringstream msg;
    msg << "mu_of_temperature: T = " << temperature_C
        << " C outside calibrated window [" << cal.min_temperature() << ", "
        << cal.max_temperature() << "] C";
    throw std::domain_error(msg.str());
  }
  // Horner evaluation of the Newton form.
  const auto& a = cal.anchors_;
  const auto& c = cal.newton_coeffs_;
  double mu = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;)
    mu = mu * (temperature_C - a[i].temperature_C) + c[i];
  return mu;
}

double phase_mismatch_linearized(double omega_a_radps, double omega_b_radps,
                                 double temperature_C, const CrystalParams& p,
                                 const DetuningCalibration& cal) {
  p.validate();
  const double residual = omega_a_radps + omega_b_radps - p.pump_frequency_radps;
  if (std::abs(residual) > 1e-9)
    throw std::invalid_argument(
        "phase_mismatch_linearized: omega_a + omega_b must equal the pump frequency");
  const double mu = mu_of_temperature(temperature_C, cal);
  const double omega_a0 = 0.5 * (p.pump_frequency_radps + mu);
  const double omega_b0 = 0.5 * (p.pump_frequency_radps - mu);
  return -(omega_a_radps - omega_a0) * p.group_slope_a_ps_per_mm -
         (omega_b_radps - omega_b0) * p.group_slope_b_ps_per_mm;
}

std::vector<double> cooling_trajectory(double T0_C, double T_env_C,
                                       double time_constant_s,
                                       const std::vector<double>& times_s) {
  if (!(time_constant_s > 0.0))
    throw std::invalid_argument("cooling_trajectory: time constant must be positive");
  if (!(T0_C > T_env_C))
    throw std::invalid_argument("cooling_trajectory: T0 must exceed the environment");
  std::vector<double> out;
  out.reserve(times_s.size());
  for (double t : times_s)
    out.push_back(T_env_C + (T0_C - T_env_C) * std::exp(-t / time_constant_s));
  return out;
}

}  // namespace hombeat
