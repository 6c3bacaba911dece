#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hombeat/dispersion.hpp"

namespace hombeat {

/// Contents of the flat key-value config file.  Recognized keys:
///   degenerate_temperature = <degC>
///   anchor = <degC> <rad/ps>          (repeatable, >= 2 for a calibration)
///   pair_rate = <Hz>
///   dwell_time = <s>
///   coincidence_window_ns = <ns>
///   accidental_rate = <Hz>
///   seed = <integer>
/// '#' starts a comment; floats round-trip as decimal strings.
struct FileConfig {
  std::optional<DetuningCalibration> calibration;
  std::optional<double> pair_rate_hz;
  std::optional<double> dwell_time_s;
  std::optional<double> coincidence_window_ns;
  std::optional<double> accidental_rate_hz;
  std::optional<std::uint64_t> seed;
};

FileConfig load_config(const std::string& path);
FileConfig parse_config(const std::string& text, const std::string& origin);

}  // namespace hombeat
