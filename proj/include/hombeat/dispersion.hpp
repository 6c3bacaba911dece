#pragma once

#include <cstddef>
#include <vector>

namespace hombeat {

/// Collinear type-II downconversion crystal, reduced to the quantities the
/// interference math needs: length, inverse-group-velocity slopes of the two
/// photon polarizations, poling period and pump frequency.
struct CrystalParams {
  double length_mm = 0.0;            // L
  double group_slope_a_ps_per_mm = 0.0;  // k_a'
  double group_slope_b_ps_per_mm = 0.0;  // k_b'
  double poling_period_um = 0.0;     // Lambda
  double pump_frequency_radps = 0.0; // omega_p

  void validate() const;
};

/// Bandwidth parameter zeta = |4 / (L (k_a' - k_b'))|, rad/ps.
double zeta_from_crystal(const CrystalParams& p);

/// Bandwidth parameter from the single-photon spectral bandwidth,
/// zeta = 2 delta_omega / pi.
double zeta_from_bandwidth(double delta_omega);

/// Temperature -> center-detuning calibration mu(T).
///
/// A polynomial through the anchor points (Newton form); with the default
/// three anchors this is a quadratic.  Valid for T within
/// [min anchor - 10, max anchor + 10] degC; outside that window evaluation
/// throws rather than extrapolate further.
struct DetuningCalibration {
  struct Anchor {
    double temperature_C;
    double mu_radps;
  };

  DetuningCalibration(std::vector<Anchor> anchors, double degenerate_temperature_C);

  /// Calibration for the 810 nm degenerate PPKTP source: anchors
  /// (28 C, -25.4), (49.2 C, 0), (90 C, 42.2) rad/ps, degenerate at 49.2 C.
  static DetuningCalibration default_ppktp810();

  const std::vector<Anchor>& anchors() const { return anchors_; }
  double degenerate_temperature() const { return degenerate_temperature_C_; }
  double min_temperature() const { return anchors_.front().temperature_C - 10.0; }
  double max_temperature() const { return anchors_.back().temperature_C + 10.0; }

 private:
  std::vector<Anchor> anchors_;
  std::vector<double> newton_coeffs_;  // divided differences
  double degenerate_temperature_C_;

  friend double mu_of_temperature(double, const DetuningCalibration&);
};

/// Center detuning mu at crystal temperature T (degC), rad/ps.
double mu_of_temperature(double temperature_C, const DetuningCalibration& cal);

/// Linearized phase mismatch for a photon pair (omega_a, omega_b) on the
/// energy-conservation ridge omega_a + omega_b = pump frequency:
///   dk = -(omega_a - omega_a0(T)) k_a' - (omega_b - omega_b0(T)) k_b'
/// with omega_{a,b}0 = omega_p/2 +- mu(T)/2.  Returns rad/mm and satisfies
/// sinc(L dk / 2) == sinc((nu - mu)/zeta) on the ridge.
double phase_mismatch_linearized(double omega_a_radps, double omega_b_radps,
                                 double temperature_C, const CrystalParams& p,
                                 const DetuningCalibration& cal);

/// Newton cooling T(t) = T_env + (T0 - T_env) exp(-t / time_constant),
/// evaluated at the given times (seconds).  Requires T0 > T_env.
std::vector<double> cooling_trajectory(double T0_C, double T_env_C,
                                       double time_constant_s,
                                       const std::vector<double>& times_s);

}  // namespace hombeat
