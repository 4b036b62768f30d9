// Command-line front end: rate-versus-distance sweeps, zero-capacity
// distances, Monte-Carlo verification and single-point channel summaries.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "eplink/config.h"
#include "eplink/errors.h"
#include "eplink/format.h"
#include "eplink/sweep.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitIo = 3;

// Values are collected as strings and applied through the same path as the
// config file, so both sources share validation and error messages.
struct Overrides {
  std::string config_path;
  std::map<std::string, std::string> values;
  std::vector<std::string> p_dc;
  bool log_scale = false;
};

void add_common_options(CLI::App* app, Overrides& o) {
  app->add_option("--config", o.config_path, "Flat key = value parameter file");
  const std::vector<std::pair<std::string, std::string>> flags = {
      {"alpha", "Fiber loss in dB/km"},
      {"delta-nu", "Photon bandwidth in GHz"},
      {"d-pmd", "PMD coefficient in ps/sqrt(km)"},
      {"regime", "PMD regime: depol or dephase"},
      {"p-inf", "Asymptotic error probability (depol regime)"},
      {"L", "Decoherence length in km (depol regime)"},
      {"d-min", "Smallest distance in km"},
      {"d-max", "Largest distance in km"},
      {"points", "Number of distance points"},
      {"clock-hz", "Source clock for ebits/s conversion"},
      {"seed", "Monte-Carlo seed"},
      {"trials", "Monte-Carlo trials per point"},
      {"distance", "Distance in km for single-point output"},
      {"out", "Output file (default stdout)"},
      {"format", "Output format: csv or json"},
  };
  for (const auto& [flag, help] : flags) {
    std::string key = flag;
    std::replace(key.begin(), key.end(), '-', '_');
    app->add_option("--" + flag, o.values[key], help);
  }
  app->add_option("--p-dc", o.p_dc, "Dark-count probability (repeatable)");
  app->add_flag("--log-scale", o.log_scale, "Log-spaced distance grid");
}

eplink::SweepConfig build_config(const CLI::App* app, const Overrides& o) {
  eplink::SweepConfig config;
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw eplink::IoError("cannot read config file '" + o.config_path + "'");
    eplink::load_config(in, o.config_path, config);
  }
  for (const auto& [key, value] : o.values) {
    std::string flag = key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    if (app->count("--" + flag) > 0) eplink::apply_setting(config, key, value);
  }
  if (!o.p_dc.empty()) {
    std::string joined;
    for (const auto& v : o.p_dc) joined += (joined.empty() ? "" : ",") + v;
    eplink::apply_setting(config, "p_dc", joined);
  }
  if (o.log_scale) config.scale = eplink::GridScale::Log;
  config.validate();
  return config;
}

void write_text(const eplink::SweepConfig& config, const std::string& text) {
  if (config.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(config.out, std::ios::binary | std::ios::trunc);
  if (!file) throw eplink::IoError("cannot open '" + config.out + "' for writing");
  file << text;
  if (!file) throw eplink::IoError("failed writing '" + config.out + "'");
}

int run_threshold(const eplink::SweepConfig& config) {
  const auto fiber = config.fiber();
  std::string text = "p_dc,d_zero_km\n";
  for (double p_dc : config.p_dc) {
    const double d = eplink::solve_threshold(fiber, eplink::DarkCountParams(p_dc));
    text += eplink::format_double(p_dc) + "," + eplink::format_double(d) + "\n";
  }
  write_text(config, text);
  return kExitOk;
}

int run_show_channel(const eplink::SweepConfig& config) {
  const auto fiber = config.fiber();
  const auto ch = eplink::channel_at_distance(fiber, config.distance);
  std::string text;
  text += "distance_km " + eplink::format_double(config.distance) + "\n";
  text += "decoherence_length_km " + eplink::format_double(fiber.decoherence_length_km()) + "\n";
  text += "eta " + eplink::format_double(ch.eta()) + "\n";
  text += "p " + eplink::format_double(eplink::pauli_probability(fiber, config.distance)) + "\n";
  for (double p_dc : config.p_dc) {
    const auto eff = eplink::effective_channel(ch, eplink::DarkCountParams(p_dc));
    const auto b = eplink::capacity_bounds(eff);
    text += "p_dc " + eplink::format_double(p_dc) + ": eta' " + eplink::format_double(eff.eta()) + " p' (";
    for (std::size_t k = 0; k < 4; ++k) text += (k ? ", " : "") + eplink::format_double(eff.dist()[k]);
    text += ") lower " + eplink::format_double(b.lower) + " upper " + eplink::format_double(b.upper) +
            (b.exact ? " exact" : "");
    if (config.clock_hz) text += " rate_per_s " + eplink::format_double(*config.clock_hz * b.lower);
    text += "\n";
  }
  write_text(config, text);
  return kExitOk;
}

int run_verify(const eplink::SweepConfig& config) {
  const auto report = eplink::verify(config);
  if (config.out.empty()) {
    std::cout << (config.format == eplink::OutputFormat::Json ? report.json() : report.text());
  } else {
    std::cout << report.text();
    write_text(config, config.format == eplink::OutputFormat::Json ? report.json() : report.text());
  }
  if (!report.passed()) {
    for (const auto& c : report.checks) {
      if (!c.pass) std::cerr << "verification failed: " << c.name << '\n';
    }
    return kExitVerifyFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement-distribution capacity bounds for polarization qubits in optical fiber"};
  app.require_subcommand(1);

  Overrides sweep_o, threshold_o, verify_o, show_o;
  auto* sweep = app.add_subcommand("sweep", "Capacity bounds versus distance (CSV or JSON)");
  auto* threshold = app.add_subcommand("threshold", "Distance at which the upper bound reaches zero");
  auto* verify = app.add_subcommand("verify", "Monte-Carlo cross-check of the closed forms");
  auto* show = app.add_subcommand("show-channel", "Channel parameters and bounds at one distance");
  add_common_options(sweep, sweep_o);
  add_common_options(threshold, threshold_o);
  add_common_options(verify, verify_o);
  add_common_options(show, show_o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (sweep->parsed()) {
      const auto config = build_config(sweep, sweep_o);
      eplink::emit_sweep(config, eplink::run_sweep(config), std::cout);
      return kExitOk;
    }
    if (threshold->parsed()) return run_threshold(build_config(threshold, threshold_o));
    if (verify->parsed()) return run_verify(build_config(verify, verify_o));
    if (show->parsed()) return run_show_channel(build_config(show, show_o));
  } catch (const eplink::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const eplink::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
