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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "udnsim/presets.hpp"
#include "udnsim/stats.hpp"

namespace udnsim {
namespace {

TEST(Cdf, Examples) {
  const auto one = build_cdf({5.0});
  EXPECT_EQ(one.values, std::vector<double>{5.0});
  EXPECT_EQ(one.probabilities, std::vector<double>{1.0});

  const auto four = build_cdf({3.0, 1.0, 4.0, 2.0});
  EXPECT_EQ(four.values, (std::vector<double>{1.0, 2.0, 3.0, 4.0}));
  EXPECT_DOUBLE_EQ(four.probabilities[1], 0.5);
  EXPECT_THROW(build_cdf({}), ConfigError);
}

TEST(Cdf, MatchesNormalCdf) {
  std::mt19937_64 rng(10);
  std::normal_distribution<double> n;
  std::vector<double> x(10000);
  for (auto& v : x) v = n(rng);
  const auto cdf = build_cdf(x);
  for (std::size_t i = 0; i < cdf.size(); ++i) {
    const double phi = 0.5 * std::erfc(-cdf.values[i] / std::sqrt(2.0));
    EXPECT_LT(std::abs(cdf.probabilities[i] - phi), 0.02);
  }
}

TEST(Percentile, Examples) {
  std::vector<double> x;
  for (int i = 1; i <= 100; ++i) x.push_back(i);
  EXPECT_DOUBLE_EQ(percentile(build_cdf(x), 0.05), 5.0);
  EXPECT_DOUBLE_EQ(percentile(build_cdf({1.0, 1.0, 1.0}), 0.5), 1.0);
}

TEST(Percentile, ExponentialQuantile) {
  std::mt19937_64 rng(11);
  std::exponential_distribution<double> e(1.0);
  std::vector<double> x(10000);
  for (auto& v : x) v = e(rng);
  EXPECT_NEAR(percentile(build_cdf(x), 0.05), -std::log(0.95), 0.1 * -std::log(0.95));
}

TEST(Percentile, RoundTripsEverySample) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u;
  std::vector<double> x(997);
  for (auto& v : x) v = u(rng);
  const auto cdf = build_cdf(x);
  for (std::size_t i = 0; i < cdf.size(); ++i)
    EXPECT_EQ(percentile(cdf, static_cast<double>(i + 1) / static_cast<double>(cdf.size())), cdf.values[i]);
}

TEST(Summarize, AveragesUesThenDrops) {
  std::vector<DropResult> drops(2);
  drops[0].per_ue_throughput_bps = {1.0, 3.0};
  drops[0].per_ue_mean_sinr_db = {0.0, 0.0};
  drops[0].cell_throughput_bps = 4.0;
  drops[1].per_ue_throughput_bps = {6.0, 6.0, 6.0, 6.0};
  drops[1].per_ue_mean_sinr_db = {1.0, 1.0, 1.0, 1.0};
  drops[1].cell_throughput_bps = 24.0;
  const auto s = summarize(drops);
  EXPECT_DOUBLE_EQ(s.mean_cell_tput_bps, 14.0);
  EXPECT_DOUBLE_EQ(s.mean_ue_tput_bps, 4.0);  // (2 + 6) / 2, not 28 / 6
  EXPECT_EQ(s.ue_tput_cdf.size(), 6u);
  EXPECT_DOUBLE_EQ(s.cell_tput_std_error_bps, std::sqrt(200.0) / std::sqrt(2.0));
}

CampaignResult fake(double isd, SchedulerKind s, double cell) {
  CampaignResult r;
  r.config.isd_m = isd;
  r.config.scheduler = s;
  DropResult d;
  d.per_ue_throughput_bps = {cell};
  d.per_ue_mean_sinr_db = {0.0};
  d.cell_throughput_bps = cell;
  r.drops = {d};
  r.stats = summarize(r.drops);
  return r;
}

TEST(GainRatio, Examples) {
  const auto a = fake(20, SchedulerKind::rr4, 10e6);
  EXPECT_DOUBLE_EQ(gain_ratio(a, a, Metric::mean_cell_tput), 1.0);
  const auto b = fake(20, SchedulerKind::pf, 11.05e6);
  EXPECT_DOUBLE_EQ(gain_ratio(a, b, Metric::mean_cell_tput), 11.05e6 / 10e6);
  EXPECT_NEAR(gain_ratio(a, b, Metric::mean_cell_tput), 1.105, 1e-12);
}

TEST(GainRatio, RejectsUnpairedConfigs) {
  const auto a = fake(20, SchedulerKind::rr4, 10e6);
  auto b = fake(20, SchedulerKind::pf, 11e6);
  b.config.tx_power_dbm = 33.0;
  EXPECT_THROW(gain_ratio(a, b, Metric::mean_cell_tput), ConfigError);
  const auto c = fake(40, SchedulerKind::pf, 11e6);
  EXPECT_THROW(gain_ratio(a, c, Metric::mean_cell_tput), ConfigError);
}

TEST(GainTable, RatioIsExactlyComparisonOverBaseline) {
  const std::vector<CampaignResult> cs{fake(20, SchedulerKind::rr4, 10e6), fake(20, SchedulerKind::pf, 12e6),
                                       fake(40, SchedulerKind::rr4, 20e6), fake(40, SchedulerKind::pf, 23e6)};
  const auto t = build_gain_table(cs, {"scheduler", "rr4", "pf", Metric::mean_cell_tput});
  ASSERT_EQ(t.size(), 2u);
  for (const auto& r : t) EXPECT_EQ(r.ratio, r.comparison_value / r.baseline_value);
  EXPECT_EQ(t[1].isd_m, 40.0);
  EXPECT_EQ(t[0].metric_name, "mean_cell_tput_bps");
}

TEST(Metric, ParseRoundTrip) {
  for (auto m : {Metric::mean_cell_tput, Metric::mean_ue_tput, Metric::p05_ue_tput, Metric::p50_ue_tput})
    EXPECT_EQ(parse_metric(to_string(m)), m);
  EXPECT_THROW(parse_metric("p99"), ConfigError);
}

TEST(Presets, PinEveryParameterAndExpand) {
  for (const auto& p : presets()) {
    const auto grid = expand_preset(p);
    EXPECT_FALSE(grid.empty()) << p.name;
    EXPECT_FALSE(p.description.empty());
    for (const auto& c : grid) {
      const auto diff = differing_keys(p.base, c);
      for (const auto& k : diff) EXPECT_TRUE(comparable_axes().contains(k)) << p.name << ": " << k;
    }
  }
  const auto fig5 = expand_preset(find_preset("fig5"));
  EXPECT_EQ(fig5.size(), 5u * 10u * 2u);
  const auto fig4 = find_preset("fig4");
  EXPECT_EQ(fig4.gains.front().comparison, "rayleigh");
  EXPECT_THROW(find_preset("fig9"), ConfigError);
}

}  // namespace
}  // namespace udnsim
