/*
 * Copyright 2026 The udnsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * \file udnsim/config.hpp
 *
 * \brief Scenario configuration: defaults, validation and the flat
 * `key = value` text format.
 *
 * Format: one `key = value` per line, `#` starts a comment, blank lines are
 * ignored. Keys are the field names of ScenarioConfig. Unknown keys and
 * out-of-range values are rejected with the key name in the message.
 */

#ifndef UDNSIM_CONFIG_HPP
#define UDNSIM_CONFIG_HPP

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "udnsim/channel.hpp"
#include "udnsim/error.hpp"
#include "udnsim/link.hpp"
#include "udnsim/scheduler.hpp"

namespace udnsim {

enum class FadingModel { rician, rayleigh };

inline std::string_view to_string(FadingModel f) {
  return f == FadingModel::rician ? "rician" : "rayleigh";
}

/// How the antenna tilt and beamwidth are derived when not set explicitly.
///
/// upper_ray: fixed beamwidth (kDefaultBeamwidthDeg unless overridden), tilt
/// chosen so the upper -3 dB ray sits at alpha below the horizon. edge_ground:
/// tilt towards the cell-edge ground point and a beamwidth fitted so the
/// -3 dB ray reaches a cell-edge UE.
enum class AntennaCalibration { upper_ray, edge_ground };

inline constexpr double kDefaultBeamwidthDeg = 10.0;

inline std::string_view to_string(AntennaCalibration a) {
  return a == AntennaCalibration::upper_ray ? "upper_ray" : "edge_ground";
}

inline AntennaCalibration parse_antenna_calibration(std::string_view s) {
  if (s == "upper_ray") return AntennaCalibration::upper_ray;
  if (s == "edge_ground") return AntennaCalibration::edge_ground;
  throw ConfigError("antenna_calibration", "expected upper_ray|edge_ground, got '" + std::string(s) + "'");
}

inline FadingModel parse_fading_model(std::string_view s) {
  if (s == "rician") return FadingModel::rician;
  if (s == "rayleigh") return FadingModel::rayleigh;
  throw ConfigError("fading_model", "expected rician|rayleigh, got '" + std::string(s) + "'");
}

struct ScenarioConfig {
  // deployment
  double isd_m = 40.0;
  int n_tiers = 1;
  int n_ue = 4;
  double alpha_deg = kDefaultAlphaDeg;
  double h_ue_m = kDefaultUeHeightM;

  // scheduling
  SchedulerKind scheduler = SchedulerKind::pf;
  int n_subframes = 100;
  double t_c = 4.0;
  int n_max = 0;  // 0: ceil(n_ue / 2)

  // radio
  FadingModel fading_model = FadingModel::rician;
  double carrier_ghz = 2.0;
  double bandwidth_mhz = 10.0;
  int n_rb = 50;
  double shadow_sigma_db = 4.0;
  double d_cor_m = 20.0;
  double tx_power_dbm = 30.0;
  double noise_figure_db = 9.0;
  double eta_max = 5.55;

  LosModel los_model = LosModel::bernoulli;
  PathLossModel path_loss;
  AntennaCalibration antenna_calibration = AntennaCalibration::edge_ground;
  double antenna_max_gain_dbi = 5.0;
  double antenna_side_lobe_db = 20.0;
  std::optional<double> antenna_tilt_deg;       // empty: from antenna_calibration
  std::optional<double> antenna_beamwidth_deg;  // empty: from antenna_calibration

  // campaign
  int n_drops = 500;
  std::uint64_t master_seed = 1;

  std::size_t resolved_n_max() const {
    return n_max > 0 ? static_cast<std::size_t>(n_max) : default_n_max(static_cast<std::size_t>(n_ue));
  }

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

namespace detail {

inline std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline double parse_double(const std::string& key, std::string_view v) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out))
    throw ConfigError(key, "expected a number, got '" + std::string(v) + "'");
  return out;
}

template <class Int>
Int parse_int(const std::string& key, std::string_view v) {
  Int out{};
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw ConfigError(key, "expected an integer, got '" + std::string(v) + "'");
  return out;
}

/// Getter/setter pair for one config key.
struct Field {
  std::function<std::string(const ScenarioConfig&)> get;
  std::function<void(ScenarioConfig&, std::string_view)> set;
};

// std::map keeps serialization order stable (alphabetical by key).
inline const std::map<std::string, Field>& fields() {
  static const std::map<std::string, Field> table = [] {
    std::map<std::string, Field> t;
    auto real = [&t](std::string key, double ScenarioConfig::*m) {
      t[key] = {[m](const ScenarioConfig& c) { return format_double(c.*m); },
                [m, key](ScenarioConfig& c, std::string_view v) { c.*m = parse_double(key, v); }};
    };
    auto integer = [&t](std::string key, int ScenarioConfig::*m) {
      t[key] = {[m](const ScenarioConfig& c) { return std::to_string(c.*m); },
                [m, key](ScenarioConfig& c, std::string_view v) { c.*m = parse_int<int>(key, v); }};
    };
    auto path_loss = [&t](std::string key, double PathLossModel::*m) {
      t[key] = {[m](const ScenarioConfig& c) { return format_double(c.path_loss.*m); },
                [m, key](ScenarioConfig& c, std::string_view v) { c.path_loss.*m = parse_double(key, v); }};
    };
    auto optional_real = [&t](std::string key, std::optional<double> ScenarioConfig::*m) {
      t[key] = {[m](const ScenarioConfig& c) {
                  return (c.*m) ? format_double(*(c.*m)) : std::string("auto");
                },
                [m, key](ScenarioConfig& c, std::string_view v) {
                  if (v == "auto") c.*m = std::nullopt;
                  else c.*m = parse_double(key, v);
                }};
    };

    real("isd_m", &ScenarioConfig::isd_m);
    integer("n_tiers", &ScenarioConfig::n_tiers);
    integer("n_ue", &ScenarioConfig::n_ue);
    real("alpha_deg", &ScenarioConfig::alpha_deg);
    real("h_ue_m", &ScenarioConfig::h_ue_m);
    t["scheduler"] = {[](const ScenarioConfig& c) { return std::string(to_string(c.scheduler)); },
                      [](ScenarioConfig& c, std::string_view v) { c.scheduler = parse_scheduler(v); }};
    integer("n_subframes", &ScenarioConfig::n_subframes);
    real("t_c", &ScenarioConfig::t_c);
    t["n_max_rule"] = {
        [](const ScenarioConfig& c) { return c.n_max > 0 ? std::to_string(c.n_max) : std::string("half_up"); },
        [](ScenarioConfig& c, std::string_view v) {
          if (v == "half_up") c.n_max = 0;
          else c.n_max = parse_int<int>("n_max_rule", v);
          if (c.n_max < 0) throw ConfigError("n_max_rule", "must be half_up or a positive integer");
        }};
    t["fading_model"] = {[](const ScenarioConfig& c) { return std::string(to_string(c.fading_model)); },
                         [](ScenarioConfig& c, std::string_view v) { c.fading_model = parse_fading_model(v); }};
    real("carrier_ghz", &ScenarioConfig::carrier_ghz);
    real("bandwidth_mhz", &ScenarioConfig::bandwidth_mhz);
    integer("n_rb", &ScenarioConfig::n_rb);
    real("shadow_sigma_db", &ScenarioConfig::shadow_sigma_db);
    real("d_cor_m", &ScenarioConfig::d_cor_m);
    real("tx_power_dbm", &ScenarioConfig::tx_power_dbm);
    real("noise_figure_db", &ScenarioConfig::noise_figure_db);
    real("eta_max", &ScenarioConfig::eta_max);
    t["los_model"] = {[](const ScenarioConfig& c) { return std::string(to_string(c.los_model)); },
                      [](ScenarioConfig& c, std::string_view v) { c.los_model = parse_los_model(v); }};
    t["antenna_calibration"] = {
        [](const ScenarioConfig& c) { return std::string(to_string(c.antenna_calibration)); },
        [](ScenarioConfig& c, std::string_view v) { c.antenna_calibration = parse_antenna_calibration(v); }};
    path_loss("pl_los_slope", &PathLossModel::los_slope);
    path_loss("pl_los_offset", &PathLossModel::los_offset);
    path_loss("pl_los_freq_coef", &PathLossModel::los_freq_coef);
    path_loss("pl_nlos_slope", &PathLossModel::nlos_slope);
    path_loss("pl_nlos_offset", &PathLossModel::nlos_offset);
    path_loss("pl_nlos_freq_coef", &PathLossModel::nlos_freq_coef);
    real("antenna_max_gain_dbi", &ScenarioConfig::antenna_max_gain_dbi);
    real("antenna_side_lobe_db", &ScenarioConfig::antenna_side_lobe_db);
    optional_real("antenna_tilt_deg", &ScenarioConfig::antenna_tilt_deg);
    optional_real("antenna_beamwidth_deg", &ScenarioConfig::antenna_beamwidth_deg);
    integer("n_drops", &ScenarioConfig::n_drops);
    t["master_seed"] = {[](const ScenarioConfig& c) { return std::to_string(c.master_seed); },
                        [](ScenarioConfig& c, std::string_view v) {
                          c.master_seed = parse_int<std::uint64_t>("master_seed", v);
                        }};
    return t;
  }();
  return table;
}

}  // namespace detail

/// All recognised keys, in serialization order.
inline std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& [k, f] : detail::fields()) keys.push_back(k);
  return keys;
}

/// Range-checks every field; throws ConfigError naming the first bad key.
inline void validate(const ScenarioConfig& c) {
  auto require = [](bool ok, const char* key, const char* what) {
    if (!ok) throw ConfigError(key, what);
  };
  require(c.isd_m > 0.0, "isd_m", "must be positive");
  require(c.isd_m / 2.0 > kMinUeDistanceM, "isd_m", "cell too small for the 1 m UE exclusion radius");
  require(c.n_tiers >= 0 && c.n_tiers <= 10, "n_tiers", "must lie in [0, 10]");
  require(c.n_ue >= 1 && c.n_ue <= 1000, "n_ue", "must lie in [1, 1000]");
  require(c.alpha_deg > 0.0 && c.alpha_deg < 90.0, "alpha_deg", "must lie in (0, 90)");
  require(c.h_ue_m > 0.0, "h_ue_m", "must be positive");
  require(c.n_subframes >= 1, "n_subframes", "must be at least 1");
  require(c.t_c >= 1.0, "t_c", "must be at least 1");
  require(c.n_max >= 0, "n_max_rule", "must be half_up or a positive integer");
  require(c.carrier_ghz > 0.0, "carrier_ghz", "must be positive");
  require(c.bandwidth_mhz > 0.0, "bandwidth_mhz", "must be positive");
  require(c.n_rb >= 1, "n_rb", "must be at least 1");
  require(c.n_rb * kRbBandwidthHz <= c.bandwidth_mhz * 1e6 * (1.0 + 1e-12), "n_rb",
          "n_rb * 180 kHz exceeds bandwidth_mhz");
  require(c.shadow_sigma_db >= 0.0, "shadow_sigma_db", "must be non-negative");
  require(c.d_cor_m > 0.0, "d_cor_m", "must be positive");
  require(c.noise_figure_db >= 0.0, "noise_figure_db", "must be non-negative");
  require(c.eta_max > 0.0, "eta_max", "must be positive");
  require(c.antenna_side_lobe_db >= 0.0, "antenna_side_lobe_db", "must be non-negative");
  require(!c.antenna_beamwidth_deg || *c.antenna_beamwidth_deg > 0.0, "antenna_beamwidth_deg",
          "must be positive or auto");
  require(c.n_drops >= 1, "n_drops", "must be at least 1");
  require(c.path_loss.los_slope > 0.0 && c.path_loss.nlos_slope > 0.0, "pl_los_slope",
          "path-loss slopes must be positive");
}

/// Applies one `key = value` assignment.
inline void set_config_value(ScenarioConfig& c, std::string_view key, std::string_view value) {
  const auto& table = detail::fields();
  const auto it = table.find(std::string(key));
  if (it == table.end()) throw ConfigError(std::string(key), "unknown configuration key");
  it->second.set(c, detail::trim(value));
}

inline std::string get_config_value(const ScenarioConfig& c, std::string_view key) {
  const auto& table = detail::fields();
  const auto it = table.find(std::string(key));
  if (it == table.end()) throw ConfigError(std::string(key), "unknown configuration key");
  return it->second.get(c);
}

/// Applies `key=value` (or `key = value`) text.
inline void apply_assignment(ScenarioConfig& c, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos)
    throw ConfigError(std::string(detail::trim(assignment)), "expected key = value");
  set_config_value(c, detail::trim(assignment.substr(0, eq)), assignment.substr(eq + 1));
}

/// Parses config text over `base` (defaults when omitted) and validates it.
inline ScenarioConfig parse_config(std::istream& in, ScenarioConfig base = {}) {
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = detail::trim(view);
    if (view.empty()) continue;
    apply_assignment(base, view);
  }
  validate(base);
  return base;
}

inline ScenarioConfig parse_config_text(std::string_view text, ScenarioConfig base = {}) {
  std::istringstream in{std::string(text)};
  return parse_config(in, std::move(base));
}

inline ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base = {}) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  return parse_config(in, std::move(base));
}

inline std::string serialize_config(const ScenarioConfig& c) {
  std::string out;
  for (const auto& [key, field] : detail::fields()) out += key + " = " + field.get(c) + "\n";
  return out;
}

}  // namespace udnsim

#endif  // UDNSIM_CONFIG_HPP
