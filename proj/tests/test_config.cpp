#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "hombeat/config.hpp"

using namespace hombeat;

TEST_CASE("config parses calibration anchors and counting parameters") {
  const std::string text =
      "# source calibration\n"
      "degenerate_temperature = 49.2\n"
      "anchor = 28 -25.4\n"
      "anchor = 49.2 0\n"
      "anchor = 90 42.2   # quoted detunings\n"
      "\n"
      "pair_rate = 100000\n"
      "dwell_time = 0.25\n"
      "coincidence_window_ns = 4.4\n"
      "accidental_rate = 12.5\n"
      "seed = 424242\n";
  const FileConfig cfg = parse_config(text, "inline");
  REQUIRE(cfg.calibration.has_value());
  CHECK(cfg.calibration->anchors().size() == 3);
  CHECK(std::abs(mu_of_temperature(49.2, *cfg.calibration)) < 1e-9);
  CHECK(std::abs(mu_of_temperature(90.0, *cfg.calibration) - 42.2) < 1e-9);
  CHECK(cfg.pair_rate_hz == 100000.0);
  CHECK(cfg.dwell_time_s == 0.25);
  CHECK(cfg.coincidence_window_ns == 4.4);
  CHECK(cfg.accidental_rate_hz == 12.5);
  CHECK(cfg.seed == 424242u);
}

TEST_CASE("config round-trips decimal strings exactly") {
  const FileConfig cfg = parse_config(
      "degenerate_temperature = 49.2\n"
      "anchor = 28.000000000000004 -25.399999999999999\n"
      "anchor = 49.2 0\n"
      "dwell_time = 0.1\n",
      "inline");
  CHECK(cfg.calibration->anchors()[0].temperature_C == 28.000000000000004);
  CHECK(cfg.calibration->anchors()[0].mu_radps == -25.399999999999999);
  CHECK(cfg.dwell_time_s == 0.1);
}

TEST_CASE("config without calibration keys leaves it empty") {
  const FileConfig cfg = parse_config("pair_rate = 5\n", "inline");
  CHECK_FALSE(cfg.calibration.has_value());
  CHECK(cfg.pair_rate_hz == 5.0);
  CHECK_FALSE(cfg.seed.has_value());
}

TEST_CASE("config rejects malformed input") {
  CHECK_THROWS_AS(parse_config("anchor = 28\n", "inline"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("anchor = 28 five\n", "inline"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("mystery_key = 1\n", "inline"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("pair_rate\n", "inline"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config("seed = 12.5\n", "inline"), std::invalid_argument);
  // anchors without a degeneracy temperature
  CHECK_THROWS_AS(parse_config("anchor = 28 -25.4\nanchor = 90 42.2\n", "inline"),
                  std::invalid_argument);
  // single anchor cannot define a calibration
  CHECK_THROWS_AS(
      parse_config("degenerate_temperature = 49.2\nanchor = 49.2 0\n", "inline"),
      std::invalid_argument);
  CHECK_THROWS_AS(load_config("/nonexistent/path.cfg"), std::invalid_argument);
}
