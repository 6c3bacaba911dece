#include "hombeat/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hombeat {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& text, const std::string& context) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw std::invalid_argument(context + ": cannot parse number '" + text + "'");
  return value;
}

std::uint64_t parse_u64(const std::string& text, const std::string& context) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const unsigned long long value = std::strtoull(begin, &end, 10);
  if (end == begin || *end != '\0')
    throw std::invalid_argument(context + ": cannot parse integer '" + text + "'");
  return value;
}

}  // namespace

FileConfig parse_config(const std::string& text, const std::string& origin) {
  FileConfig cfg;
  std::vector<DetuningCalibration::Anchor> anchors;
  std::optional<double> degenerate;

  std::istringstream stream(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    std::ostringstream ctx;
    ctx << origin << ":" << line_no;
    if (eq == std::string::npos)
      throw std::invalid_argument(ctx.str() + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "anchor") {
      std::istringstream pair(value);
      std::string t_str, mu_str, extra;
      pair >> t_str >> mu_str;
      if (t_str.empty() || mu_str.empty() || (pair >> extra))
        throw std::invalid_argument(ctx.str() + ": anchor needs '<degC> <rad/ps>'");
      anchors.push_back({parse_double(t_str, ctx.str()), parse_double(mu_str, ctx.str())});
    } else if (key == "degenerate_temperature") {
      degenerate = parse_double(value, ctx.str());
    } else if (key == "pair_rate") {
      cfg.pair_rate_hz = parse_double(value, ctx.str());
    } else if (key == "dwell_time") {
      cfg.dwell_time_s = parse_double(value, ctx.str());
    } else if (key == "coincidence_window_ns") {
      cfg.coincidence_window_ns = parse_double(value, ctx.str());
    } else if (key == "accidental_rate") {
      cfg.accidental_rate_hz = parse_double(value, ctx.str());
    } else if (key == "seed") {
      cfg.seed = parse_u64(value, ctx.str());
    } else {
      throw std::invalid_argument(ctx.str() + ": unknown key '" + key + "'");
    }
  }

  if (!anchors.empty() || degenerate) {
    if (anchors.size() < 2)
      throw std::invalid_argument(origin + ": calibration needs at least 2 anchors");
    if (!degenerate)
      throw std::invalid_argument(origin + ": calibration needs degenerate_temperature");
    cfg.calibration = DetuningCalibration(anchors, *degenerate);
  }
  return cfg;
}

FileConfig load_config(const std::string& path) {
  std::ifstream file(path);
  if (!file)
    throw std::invalid_argument("load_config: cannot open '" + path + "'");
  std::ostringstream text;
  text << file.rdbuf();
  return parse_config(text.str(), path);
}

}  // namespace hombeat
