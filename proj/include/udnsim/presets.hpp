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
 * \file udnsim/presets.hpp
 *
 * \brief Named experiment grids, one per published figure.
 *
 * A preset is a complete base config plus a list of swept axes. Expanding it
 * gives the cartesian product of the axis values, first axis outermost. Every
 * campaign keeps the base master seed, so paired campaigns share their random
 * streams.
 */

#ifndef UDNSIM_PRESETS_HPP
#define UDNSIM_PRESETS_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "udnsim/config.hpp"
#include "udnsim/error.hpp"
#include "udnsim/result.hpp"
#include "udnsim/stats.hpp"

namespace udnsim {

struct SweepAxis {
  std::string key;
  std::vector<std::string> values;
};

/// Ratio rows to emit: comparison / baseline on `axis`, all else equal.
struct GainSpec {
  std::string axis;
  std::string baseline;
  std::string comparison;
  Metric metric = Metric::mean_cell_tput;
};

struct Preset {
  std::string name;
  std::string description;
  ScenarioConfig base;
  std::vector<SweepAxis> axes;
  std::vector<GainSpec> gains;
};

namespace detail {

inline std::vector<std::string> int_range(int first, int last) {
  std::vector<std::string> out;
  for (int i = first; i <= last; ++i) out.push_back(std::to_string(i));
  return out;
}

inline const std::vector<std::string>& fig_isds() {
  static const std::vector<std::string> isds{"20", "40", "70", "150", "200"};
  return isds;
}

}  // namespace detail

inline std::vector<Preset> presets() {
  ScenarioConfig base;  // every field pinned to the library defaults
  base.n_ue = 4;
  base.scheduler = SchedulerKind::pf;
  base.fading_model = FadingModel::rician;

  std::vector<Preset> out;
  out.push_back({"tiers", "interfering-tier convergence: SINR CDF for 0..3 tiers at ISD 20/40/70 m",
                 base,
                 {{"isd_m", {"20", "40", "70"}}, {"n_tiers", {"0", "1", "2", "3"}}},
                 {}});
  out.push_back({"fig3", "CDF of UE SINR for different ISDs (PF, 4 UEs)",
                 base,
                 {{"isd_m", detail::fig_isds()}},
                 {}});
  out.push_back({"fig4", "Rayleigh over Rician cell-throughput gain, PF, 5 and 10 UEs",
                 base,
                 {{"isd_m", {"20", "30", "40", "50", "60", "70"}},
                  {"n_ue", {"5", "10"}},
                  {"fading_model", {"rician", "rayleigh"}}},
                 {{"fading_model", "rician", "rayleigh", Metric::mean_cell_tput}}});
  out.push_back({"fig5", "mean cell throughput vs UEs per cell for PF and RR4",
                 base,
                 {{"isd_m", detail::fig_isds()},
                  {"n_ue", detail::int_range(1, 10)},
                  {"scheduler", {"rr4", "pf"}}},
                 {{"scheduler", "rr4", "pf", Metric::mean_cell_tput}}});
  out.push_back({"fig6", "mean UE throughput vs UEs per cell for PF and RR4",
                 base,
                 {{"isd_m", detail::fig_isds()},
                  {"n_ue", detail::int_range(1, 10)},
                  {"scheduler", {"rr4", "pf"}}},
                 {{"scheduler", "rr4", "pf", Metric::mean_ue_tput}}});
  out.push_back({"fig7", "CDF and 5%-tile of UE throughput for PF and RR4 (4 UEs)",
                 base,
                 {{"isd_m", detail::fig_isds()}, {"scheduler", {"rr4", "pf"}}},
                 {{"scheduler", "rr4", "pf", Metric::p05_ue_tput}}});
  return out;
}

inline Preset find_preset(std::string_view name) {
  for (auto& p : presets())
    if (p.name == name) return p;
  std::string known;
  for (const auto& p : presets()) known += (known.empty() ? "" : "|") + p.name;
  throw ConfigError("preset", "unknown preset '" + std::string(name) + "'; expected " + known);
}

/// Cartesian product of the axes over `base`, first axis outermost.
inline std::vector<ScenarioConfig> expand_grid(const ScenarioConfig& base,
                                               const std::vector<SweepAxis>& axes) {
  std::vector<ScenarioConfig> grid{base};
  for (const auto& axis : axes) {
    if (!comparable_axes().contains(axis.key))
      throw ConfigError(axis.key, "not a sweep axis");
    std::vector<ScenarioConfig> next;
    next.reserve(grid.size() * axis.values.size());
    for (const auto& cfg : grid) {
      for (const auto& v : axis.values) {
        ScenarioConfig c = cfg;
        set_config_value(c, axis.key, v);
        next.push_back(std::move(c));
      }
    }
    grid = std::move(next);
  }
  for (const auto& c : grid) validate(c);
  return grid;
}

inline std::vector<ScenarioConfig> expand_preset(const Preset& p) {
  return expand_grid(p.base, p.axes);
}

/// One row per campaign whose `axis` equals spec.baseline and that has a
/// partner differing only in `axis` = spec.comparison.
inline GainTable build_gain_table(const std::vector<CampaignResult>& campaigns, const GainSpec& spec) {
  GainTable table;
  for (const auto& base : campaigns) {
    if (get_config_value(base.config, spec.axis) != spec.baseline) continue;
    ScenarioConfig want = base.config;
    set_config_value(want, spec.axis, spec.comparison);
    for (const auto& other : campaigns) {
      if (other.config == want) {
        table.push_back(make_gain_row(base, other, spec.metric));
        break;
      }
    }
  }
  return table;
}

}  // namespace udnsim

#endif  // UDNSIM_PRESETS_HPP
