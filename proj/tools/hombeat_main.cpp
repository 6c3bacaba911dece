// hombeat: command-line front end emitting figure-ready CSV tables and
// entanglement-witness verdicts.
//
// Subcommands: dip, beat, map, witness.  Exit codes: 0 ok, 2 flag/usage
// error, 3 domain error.

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hombeat/config.hpp"
#include "hombeat/csv.hpp"
#include "hombeat/dispersion.hpp"
#include "hombeat/interference.hpp"
#include "hombeat/scan.hpp"
#include "hombeat/separability.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using hombeat::AxisSpec;
using hombeat::CountRecord;
using hombeat::fmt_g9;
using hombeat::fmt_u64;
using nlohmann::json;

AxisSpec parse_range(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("range must be start:stop:steps, got '" + text + "'");
  const auto to_double = [&](const std::string& part) {
    char* end = nullptr;
    const double v = std::strtod(part.c_str(), &end);
    if (end == part.c_str() || *end != '\0')
      throw std::invalid_argument("bad number '" + part + "' in range '" + text + "'");
    return v;
  };
  const double start = to_double(text.substr(0, c1));
  const double stop = to_double(text.substr(c1 + 1, c2 - c1 - 1));
  const std::string steps_str = text.substr(c2 + 1);
  char* end = nullptr;
  const unsigned long long steps = std::strtoull(steps_str.c_str(), &end, 10);
  if (end == steps_str.c_str() || *end != '\0')
    throw std::invalid_argument("bad step count '" + steps_str + "' in range '" + text + "'");
  return AxisSpec(start, stop, static_cast<std::size_t>(steps));
}

// CLI11 validator so malformed ranges surface as usage errors (exit 2).
const CLI::Validator RangeValidator(
    [](std::string& input) -> std::string {
      try {
        parse_range(input);
      } catch (const std::exception& e) {
        return std::string(e.what());
      }
      return {};
    },
    "START:STOP:STEPS");

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

// Every emitted data file is paired with a manifest of the resolved inputs.
void emit(const std::string& csv, const std::string& out_path, json parameters,
          const std::string& subcommand) {
  if (out_path.empty()) {
    std::cout << csv;
    return;
  }
  write_file(out_path, csv);
  json manifest;
  manifest["tool"] = "hombeat";
  manifest["version"] = kVersion;
  manifest["subcommand"] = subcommand;
  manifest["created_utc"] = utc_timestamp();
  manifest["parameters"] = std::move(parameters);
  manifest["artifacts"] = json::array({{{"path", out_path}, {"kind", "csv"}}});
  write_file(out_path + ".manifest.json", manifest.dump(2) + "\n");
}

json axis_json(const AxisSpec& axis) {
  return {{"start", axis.start}, {"stop", axis.stop}, {"steps", axis.steps}};
}

// ----------------------------------------------------------------- options

struct CommonOptions {
  double zeta = 0.0;
  double delta_omega = 0.0;
  CLI::Option* zeta_opt = nullptr;
  CLI::Option* delta_omega_opt = nullptr;

  std::string calibration_path;
  bool counting = false;
  double pair_rate = 1e5;
  double dwell_time = 1.0;
  double accidental_rate = 0.0;
  double window_ns = 4.4;
  std::uint64_t seed = 0;
  CLI::Option* pair_rate_opt = nullptr;
  CLI::Option* dwell_opt = nullptr;
  CLI::Option* accidental_opt = nullptr;
  CLI::Option* window_opt = nullptr;
  CLI::Option* seed_opt = nullptr;

  std::string out_path;
};

void add_bandwidth_flags(CLI::App* sub, CommonOptions& o) {
  auto* group = sub->add_option_group("bandwidth")->require_option(1);
  o.zeta_opt = group->add_option("--zeta", o.zeta, "bandwidth parameter zeta (rad/ps)");
  o.delta_omega_opt = group->add_option(
      "--delta-omega", o.delta_omega,
      "single-photon spectral bandwidth (rad/ps); zeta = 2 delta-omega / pi");
}

void add_counting_flags(CLI::App* sub, CommonOptions& o) {
  sub->add_flag("--counting", o.counting, "append stochastic count columns");
  o.pair_rate_opt = sub->add_option("--pair-rate", o.pair_rate, "pair rate (1/s)");
  o.dwell_opt = sub->add_option("--dwell-time", o.dwell_time, "dwell time per point (s)");
  o.accidental_opt =
      sub->add_option("--accidental-rate", o.accidental_rate, "accidental rate (1/s)");
  o.window_opt =
      sub->add_option("--window", o.window_ns, "coincidence window (ns), default 4.4");
  o.seed_opt = sub->add_option("--seed", o.seed, "RNG base seed");
}

void add_output_flag(CLI::App* sub, CommonOptions& o) {
  sub->add_option("--out", o.out_path, "write CSV here (plus <out>.manifest.json)");
}

double resolve_zeta(const CommonOptions& o) {
  if (o.delta_omega_opt && o.delta_omega_opt->count() > 0)
    return hombeat::zeta_from_bandwidth(o.delta_omega);
  if (!(o.zeta > 0.0))
    throw std::invalid_argument("zeta must be positive");
  return o.zeta;
}

hombeat::FileConfig maybe_load_config(const CommonOptions& o) {
  if (o.calibration_path.empty()) return {};
  return hombeat::load_config(o.calibration_path);
}

hombeat::DetuningCalibration resolve_calibration(const hombeat::FileConfig& file) {
  if (file.calibration) return *file.calibration;
  return hombeat::DetuningCalibration::default_ppktp810();
}

std::optional<hombeat::CountingParams> resolve_counting(const CommonOptions& o,
                                                        const hombeat::FileConfig& file) {
  if (!o.counting) return std::nullopt;
  hombeat::CountingParams params;
  params.pair_rate_hz = file.pair_rate_hz.value_or(params.pair_rate_hz);
  params.dwell_time_s = file.dwell_time_s.value_or(params.dwell_time_s);
  params.coincidence_window_ns =
      file.coincidence_window_ns.value_or(params.coincidence_window_ns);
  params.accidental_rate_hz =
      file.accidental_rate_hz.value_or(params.accidental_rate_hz);
  params.rng_seed = file.seed.value_or(params.rng_seed);
  // flags override the file
  if (o.pair_rate_opt->count() > 0) params.pair_rate_hz = o.pair_rate;
  if (o.dwell_opt->count() > 0) params.dwell_time_s = o.dwell_time;
  if (o.accidental_opt->count() > 0) params.accidental_rate_hz = o.accidental_rate;
  if (o.window_opt->count() > 0) params.coincidence_window_ns = o.window_ns;
  if (o.seed_opt->count() > 0) params.rng_seed = o.seed;
  params.validate();
  return params;
}

json counting_json(const std::optional<hombeat::CountingParams>& params) {
  if (!params) return false;
  return {{"pair_rate_hz", params->pair_rate_hz},
          {"dwell_time_s", params->dwell_time_s},
          {"coincidence_window_ns", params->coincidence_window_ns},
          {"accidental_rate_hz", params->accidental_rate_hz},
          {"rng_seed", params->rng_seed}};
}

std::string calibration_id(const CommonOptions& o) {
  return o.calibration_path.empty() ? "builtin:ppktp810" : o.calibration_path;
}

void append_count_columns(std::ostringstream& row, const CountRecord& rec) {
  row << ',' << fmt_u64(rec.counts->raw) << ',' << fmt_u64(rec.counts->baseline) << ','
      << fmt_g9(rec.counts->p_hat) << ',' << fmt_g9(rec.counts->std_error);
}

// ------------------------------------------------------------------- dip

struct DipOptions {
  CommonOptions common;
  double mu = 0.0;
  double mu_over_zeta = 0.0;
  CLI::Option* mu_opt = nullptr;
  CLI::Option* ratio_opt = nullptr;
  std::string tau_range = "-3:3:121";
};

void run_dip(const DipOptions& o) {
  const double zeta = resolve_zeta(o.common);
  const double mu =
      o.ratio_opt->count() > 0 ? o.mu_over_zeta * zeta : o.mu;
  const auto file = maybe_load_config(o.common);

  hombeat::ScanConfig cfg;
  cfg.tau_axis = parse_range(o.tau_range);
  cfg.zeta = zeta;
  cfg.counting = resolve_counting(o.common, file);
  const auto rows = hombeat::delay_scan(cfg, mu);

  std::ostringstream csv;
  csv << "tau_ps,mu_radps,p_c";
  if (cfg.counting) csv << ",raw,baseline,p_hat,std_err";
  csv << '\n';
  for (const auto& rec : rows) {
    std::ostringstream row;
    row << fmt_g9(rec.tau_ps) << ',' << fmt_g9(rec.mu_radps) << ','
        << fmt_g9(rec.expected_p_c);
    if (rec.counts) append_count_columns(row, rec);
    csv << row.str() << '\n';
  }

  json params{{"zeta_radps", zeta},
              {"mu_radps", mu},
              {"tau_axis", axis_json(*cfg.tau_axis)},
              {"counting", counting_json(cfg.counting)}};
  emit(csv.str(), o.common.out_path, std::move(params), "dip");
}

// ------------------------------------------------------------------- beat

struct BeatOptions {
  CommonOptions common;
  double tau = 0.0;
  std::string temp_range = "28:90:621";
};

void run_beat(const BeatOptions& o) {
  const double zeta = resolve_zeta(o.common);
  const auto file = maybe_load_config(o.common);

  hombeat::ScanConfig cfg;
  cfg.temperature_axis = parse_range(o.temp_range);
  cfg.zeta = zeta;
  cfg.calibration = resolve_calibration(file);
  cfg.counting = resolve_counting(o.common, file);
  const auto rows = hombeat::detuning_scan(cfg, o.tau);

  std::ostringstream csv;
  csv << "T_C,mu_radps,p_c";
  if (cfg.counting) csv << ",raw,baseline,p_hat,std_err";
  csv << '\n';
  for (const auto& rec : rows) {
    std::ostringstream row;
    row << fmt_g9(*rec.temperature_C) << ',' << fmt_g9(rec.mu_radps) << ','
        << fmt_g9(rec.expected_p_c);
    if (rec.counts) append_count_columns(row, rec);
    csv << row.str() << '\n';
  }

  json params{{"zeta_radps", zeta},
              {"tau_ps", o.tau},
              {"temperature_axis", axis_json(*cfg.temperature_axis)},
              {"calibration", calibration_id(o.common)},
              {"counting", counting_json(cfg.counting)}};
  emit(csv.str(), o.common.out_path, std::move(params), "beat");
}

// -------------------------------------------------------------------- map

struct MapOptions {
  CommonOptions common;
  std::string tau_range = "-3:3:81";
  std::string temp_range = "28:90:81";
  bool verify = false;
};

void run_map(const MapOptions& o) {
  const double zeta = resolve_zeta(o.common);
  const auto file = maybe_load_config(o.common);

  hombeat::ScanConfig cfg;
  cfg.tau_axis = parse_range(o.tau_range);
  cfg.temperature_axis = parse_range(o.temp_range);
  cfg.zeta = zeta;
  cfg.calibration = resolve_calibration(file);
  const auto map = hombeat::map2d(cfg);

  if (o.verify) {
    // p_c depends on |tau| only, so the map must be symmetric under
    // tau -> -tau whenever the delay axis is itself symmetric.
    if (std::abs(map.tau_axis.start + map.tau_axis.stop) > 1e-9)
      throw std::invalid_argument(
          "--verify requires a delay axis symmetric about tau = 0");
    for (std::size_t it = 0; it < map.temperature_axis.steps; ++it)
      for (std::size_t jt = 0; jt < map.tau_axis.steps; ++jt) {
        const double fwd = map.at(it, jt);
        const double mirrored = map.at(it, map.tau_axis.steps - 1 - jt);
        if (std::abs(fwd - mirrored) > 1e-12)
          throw std::runtime_error("tau-symmetry violated in map grid");
      }
    std::cerr << "tau-symmetry verified\n";
  }

  std::ostringstream csv;
  csv << "tau_ps,T_C,mu_radps,p_c\n";
  for (std::size_t it = 0; it < map.temperature_axis.steps; ++it)
    for (std::size_t jt = 0; jt < map.tau_axis.steps; ++jt)
      csv << fmt_g9(map.tau_axis.value(jt)) << ','
          << fmt_g9(map.temperature_axis.value(it)) << ','
          << fmt_g9(map.mu_radps[it]) << ',' << fmt_g9(map.at(it, jt)) << '\n';

  json params{{"zeta_radps", zeta},
              {"tau_axis", axis_json(map.tau_axis)},
              {"temperature_axis", axis_json(map.temperature_axis)},
              {"calibration", calibration_id(o.common)},
              {"verify", o.verify}};
  emit(csv.str(), o.common.out_path, std::move(params), "map");
}

// ---------------------------------------------------------------- witness

struct WitnessOptions {
  double p_c = 0.0;
  double sigma = 0.0;
  double k = 3.0;
  std::string out_path;
};

void run_witness(const WitnessOptions& o) {
  const hombeat::WitnessVerdict verdict = hombeat::witness(o.p_c, o.sigma, o.k);

  std::cout << "p_c = " << fmt_g9(o.p_c) << "\n"
            << "std_error = " << fmt_g9(o.sigma) << "\n"
            << "k = " << fmt_g9(o.k) << "\n"
            << "excess = " << fmt_g9(verdict.excess) << "\n"
            << "significance = " << fmt_g9(verdict.significance) << "\n"
            << "verdict: " << (verdict.entangled ? "entangled" : "not entangled")
            << "\n";

  json record{{"p_c", o.p_c},
              {"std_error", o.sigma},
              {"k", o.k},
              {"excess", verdict.excess},
              {"entangled", verdict.entangled}};
  if (std::isfinite(verdict.significance))
    record["significance"] = verdict.significance;
  else
    record["significance"] = verdict.significance > 0 ? "inf" : "-inf";

  if (o.out_path.empty()) {
    std::cout << record.dump() << "\n";
  } else {
    write_file(o.out_path, record.dump(2) + "\n");
    json manifest;
    manifest["tool"] = "hombeat";
    manifest["version"] = kVersion;
    manifest["subcommand"] = "witness";
    manifest["created_utc"] = utc_timestamp();
    manifest["parameters"] = {{"p_c", o.p_c}, {"std_error", o.sigma}, {"k", o.k}};
    manifest["artifacts"] = json::array({{{"path", o.out_path}, {"kind", "json"}}});
    write_file(o.out_path + ".manifest.json", manifest.dump(2) + "\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-photon beamsplitter interference toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  DipOptions dip;
  auto* dip_cmd = app.add_subcommand("dip", "delay scan at fixed detuning");
  add_bandwidth_flags(dip_cmd, dip.common);
  auto* mu_group = dip_cmd->add_option_group("detuning")->require_option(0, 1);
  dip.mu_opt = mu_group->add_option("--mu", dip.mu, "center detuning mu (rad/ps)");
  dip.ratio_opt =
      mu_group->add_option("--mu-over-zeta", dip.mu_over_zeta, "detuning as mu/zeta");
  dip_cmd->add_option("--tau-range", dip.tau_range, "delay axis (ps)")
      ->check(RangeValidator)
      ->capture_default_str();
  dip_cmd->add_option("--calibration", dip.common.calibration_path,
                      "config file with counting parameters");
  add_counting_flags(dip_cmd, dip.common);
  add_output_flag(dip_cmd, dip.common);
  dip_cmd->callback([&] { run_dip(dip); });

  BeatOptions beat;
  auto* beat_cmd = app.add_subcommand("beat", "temperature scan at fixed delay");
  add_bandwidth_flags(beat_cmd, beat.common);
  beat_cmd->add_option("--tau", beat.tau, "fixed optical delay (ps)")
      ->capture_default_str();
  beat_cmd->add_option("--temp-range", beat.temp_range, "temperature axis (degC)")
      ->check(RangeValidator)
      ->capture_default_str();
  beat_cmd->add_option("--calibration", beat.common.calibration_path,
                       "config file with calibration anchors / counting parameters");
  add_counting_flags(beat_cmd, beat.common);
  add_output_flag(beat_cmd, beat.common);
  beat_cmd->callback([&] { run_beat(beat); });

  MapOptions map;
  auto* map_cmd = app.add_subcommand("map", "2D map of p_c over delay and temperature");
  add_bandwidth_flags(map_cmd, map.common);
  map_cmd->add_option("--tau-range", map.tau_range, "delay axis (ps)")
      ->check(RangeValidator)
      ->capture_default_str();
  map_cmd->add_option("--temp-range", map.temp_range, "temperature axis (degC)")
      ->check(RangeValidator)
      ->capture_default_str();
  map_cmd->add_option("--calibration", map.common.calibration_path,
                      "config file with calibration anchors");
  map_cmd->add_flag("--verify", map.verify, "check tau -> -tau symmetry of the grid");
  add_output_flag(map_cmd, map.common);
  map_cmd->callback([&] { run_map(map); });

  WitnessOptions witness_opts;
  auto* witness_cmd =
      app.add_subcommand("witness", "anti-bunching entanglement witness p_c > 1/2");
  witness_cmd->add_option("--pc", witness_opts.p_c, "measured coincidence probability")
      ->required();
  witness_cmd->add_option("--sigma", witness_opts.sigma, "standard error of p_c")
      ->required();
  witness_cmd->add_option("--k", witness_opts.k, "significance threshold")
      ->capture_default_str();
  witness_cmd->add_option("--out", witness_opts.out_path, "write the JSON record here");
  witness_cmd->callback([&] { run_witness(witness_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
