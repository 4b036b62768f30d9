#include "eplink/config.h"

#include <charconv>
#include <string>

#include "eplink/errors.h"

namespace eplink {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
  const std::string_view v = trim(text);
  double x = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size() || v.empty()) {
    throw InvalidInput("'" + std::string(key) + "': '" + std::string(v) + "' is not a number");
  }
  return x;
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view text) {
  const std::string_view v = trim(text);
  std::uint64_t x = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size() || v.empty()) {
    throw InvalidInput("'" + std::string(key) + "': '" + std::string(v) + "' is not a nonnegative integer");
  }
  return x;
}

bool parse_bool(std::string_view key, std::string_view text) {
  const std::string_view v = trim(text);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw InvalidInput("'" + std::string(key) + "': expected true/false, got '" + std::string(v) + "'");
}

}  // namespace

void apply_setting(SweepConfig& config, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "alpha") {
    config.alpha = parse_double(key, value);
  } else if (key == "delta_nu") {
    config.delta_nu = parse_double(key, value);
  } else if (key == "d_pmd") {
    config.d_pmd = parse_double(key, value);
  } else if (key == "regime") {
    if (value == "depol") {
      config.regime = RegimeKind::Depolarizing;
    } else if (value == "dephase") {
      config.regime = RegimeKind::Dephasing;
    } else {
      throw InvalidInput("'regime': expected depol or dephase, got '" + std::string(value) + "'");
    }
  } else if (key == "p_inf") {
    config.p_inf = parse_double(key, value);
  } else if (key == "L") {
    config.length_km = parse_double(key, value);
  } else if (key == "p_dc") {
    config.p_dc.clear();
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = value.find(',', start);
      config.p_dc.push_back(parse_double(key, value.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else if (key == "d_min") {
    config.d_min = parse_double(key, value);
  } else if (key == "d_max") {
    config.d_max = parse_double(key, value);
  } else if (key == "points") {
    config.points = parse_unsigned(key, value);
  } else if (key == "log_scale") {
    config.scale = parse_bool(key, value) ? GridScale::Log : GridScale::Linear;
  } else if (key == "clock_hz") {
    config.clock_hz = parse_double(key, value);
  } else if (key == "seed") {
    config.seed = parse_unsigned(key, value);
  } else if (key == "trials") {
    config.trials = parse_unsigned(key, value);
  } else if (key == "distance") {
    config.distance = parse_double(key, value);
  } else if (key == "out") {
    config.out = std::string(value);
  } else if (key == "format") {
    if (value == "csv") {
      config.format = OutputFormat::Csv;
    } else if (value == "json") {
      config.format = OutputFormat::Json;
    } else {
      throw InvalidInput("'format': expected csv or json, got '" + std::string(value) + "'");
    }
  } else {
    throw InvalidInput("unknown key '" + std::string(key) + "'");
  }
}

void load_config(std::istream& in, const std::string& source, SweepConfig& config) {
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    const std::string prefix = source + ":" + std::to_string(lineno) + ": ";
    if (eq == std::string_view::npos) throw InvalidInput(prefix + "expected 'key = value'");
    try {
      apply_setting(config, trim(view.substr(0, eq)), view.substr(eq + 1));
    } catch (const InvalidInput& e) {
      throw InvalidInput(prefix + e.what());
    }
  }
}

}  // namespace eplink
