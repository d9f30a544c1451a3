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

#ifndef UDNSIM_STATS_HPP
#define UDNSIM_STATS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "udnsim/config.hpp"
#include "udnsim/error.hpp"
#include "udnsim/result.hpp"

namespace udnsim {

inline Cdf build_cdf(std::vector<double> samples) {
  if (samples.empty()) throw ConfigError("samples", "cannot build a CDF from no samples");
  std::sort(samples.begin(), samples.end());
  Cdf cdf;
  const auto n = static_cast<double>(samples.size());
  cdf.probabilities.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i)
    cdf.probabilities.push_back(static_cast<double>(i + 1) / n);
  cdf.values = std::move(samples);
  return cdf;
}

/// Smallest sample whose cumulative probability is >= p.
inline double percentile(const Cdf& cdf, double p) {
  if (cdf.values.empty()) throw ConfigError("cdf", "empty CDF");
  const auto it = std::lower_bound(cdf.probabilities.begin(), cdf.probabilities.end(), p);
  if (it == cdf.probabilities.end()) return cdf.values.back();
  return cdf.values[static_cast<std::size_t>(it - cdf.probabilities.begin())];
}

inline double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

/// Sample standard deviation (n - 1 denominator).
inline double stddev(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

/// Aggregates drop results. Everything is recomputable from `drops`, and the
/// result depends only on the order of `drops` (by drop index), never on how
/// they were produced.
inline CampaignStats summarize(std::span<const DropResult> drops) {
  if (drops.empty()) throw ConfigError("n_drops", "no drops to summarize");
  CampaignStats s;
  std::vector<double> cell, ue_means, ue_samples, sinr_samples;
  cell.reserve(drops.size());
  ue_means.reserve(drops.size());
  for (const auto& d : drops) {
    cell.push_back(d.cell_throughput_bps);
    ue_means.push_back(mean(d.per_ue_throughput_bps));
    ue_samples.insert(ue_samples.end(), d.per_ue_throughput_bps.begin(), d.per_ue_throughput_bps.end());
    sinr_samples.insert(sinr_samples.end(), d.per_ue_mean_sinr_db.begin(), d.per_ue_mean_sinr_db.end());
  }
  s.mean_cell_tput_bps = mean(cell);
  s.cell_tput_std_error_bps = stddev(cell) / std::sqrt(static_cast<double>(cell.size()));
  s.mean_ue_tput_bps = mean(ue_means);
  s.ue_tput_cdf = build_cdf(std::move(ue_samples));
  s.sinr_cdf = build_cdf(std::move(sinr_samples));
  s.p05_ue_tput_bps = percentile(s.ue_tput_cdf, 0.05);
  s.p50_ue_tput_bps = percentile(s.ue_tput_cdf, 0.5);
  s.median_sinr_db = percentile(s.sinr_cdf, 0.5);
  return s;
}

enum class Metric { mean_cell_tput, mean_ue_tput, p05_ue_tput, p50_ue_tput };

inline std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::mean_cell_tput: return "mean_cell_tput_bps";
    case Metric::mean_ue_tput: return "mean_ue_tput_bps";
    case Metric::p05_ue_tput: return "p05_ue_tput_bps";
    case Metric::p50_ue_tput: return "p50_ue_tput_bps";
  }
  return "?";
}

inline Metric parse_metric(std::string_view s) {
  for (auto m : {Metric::mean_cell_tput, Metric::mean_ue_tput, Metric::p05_ue_tput, Metric::p50_ue_tput})
    if (to_string(m) == s) return m;
  throw ConfigError("metric", "unknown metric '" + std::string(s) + "'");
}

inline double metric_value(const CampaignStats& s, Metric m) {
  switch (m) {
    case Metric::mean_cell_tput: return s.mean_cell_tput_bps;
    case Metric::mean_ue_tput: return s.mean_ue_tput_bps;
    case Metric::p05_ue_tput: return s.p05_ue_tput_bps;
    case Metric::p50_ue_tput: return s.p50_ue_tput_bps;
  }
  return 0.0;
}

/// Config keys that a comparison may vary.
inline const std::set<std::string>& comparable_axes() {
  static const std::set<std::string> axes{"isd_m", "n_ue", "scheduler", "fading_model", "n_tiers"};
  return axes;
}

/// Keys on which two configs differ.
inline std::vector<std::string> differing_keys(const ScenarioConfig& a, const ScenarioConfig& b) {
  std::vector<std::string> out;
  for (const auto& key : config_keys())
    if (get_config_value(a, key) != get_config_value(b, key)) out.push_back(key);
  return out;
}

/// other / baseline for `metric`. The two campaigns may differ in at most one
/// comparable axis and must agree on everything else.
inline double gain_ratio(const CampaignResult& baseline, const CampaignResult& other, Metric metric) {
  const auto diff = differing_keys(baseline.config, other.config);
  for (const auto& key : diff)
    if (!comparable_axes().contains(key))
      throw ConfigError(key, "campaigns differ on a non-comparable setting");
  if (diff.size() > 1)
    throw ConfigError(diff[1], "campaigns differ on more than one axis (" + diff[0] + ", " + diff[1] + ")");
  return metric_value(other.stats, metric) / metric_value(baseline.stats, metric);
}

struct GainRow {
  double isd_m = 0.0;
  int n_ue = 0;
  std::string metric_name;
  double baseline_value = 0.0;
  double comparison_value = 0.0;
  double ratio = 0.0;
};

using GainTable = std::vector<GainRow>;

inline GainRow make_gain_row(const CampaignResult& baseline, const CampaignResult& other, Metric metric) {
  GainRow row;
  row.isd_m = baseline.config.isd_m;
  row.n_ue = baseline.config.n_ue;
  row.metric_name = std::string(to_string(metric));
  row.baseline_value = metric_value(baseline.stats, metric);
  row.comparison_value = metric_value(other.stats, metric);
  row.ratio = gain_ratio(baseline, other, metric);
  return row;
}

}  // namespace udnsim

#endif  // UDNSIM_STATS_HPP
