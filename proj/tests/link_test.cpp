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

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "udnsim/link.hpp"

namespace udnsim {
namespace {

PowerBudget unit_budget(double p_mw, double n_mw) {
  PowerBudget b;
  b.per_rb_power_mw = p_mw;
  b.noise_per_rb_mw = n_mw;
  return b;
}

TEST(PowerBudget, DefaultsSplitPowerAndAddNoiseFigure) {
  const auto b = PowerBudget::make(30.0, 50, 9.0);
  EXPECT_NEAR(b.per_rb_power_dbm, 30.0 - 10.0 * std::log10(50.0), 1e-12);
  EXPECT_NEAR(b.noise_per_rb_dbm, -112.45, 0.005);
  EXPECT_NEAR(b.per_rb_power_mw * 50.0, 1000.0, 1e-9);
  EXPECT_THROW(PowerBudget::make(30.0, 0, 9.0), ConfigError);
}

TEST(Sinr, NoiseLimited) {
  const std::vector<double> g{1.0};
  EXPECT_DOUBLE_EQ(compute_sinr(g, 0, unit_budget(100.0, 1.0)), 100.0);
}

TEST(Sinr, SixEqualInterferers) {
  const std::vector<double> g(7, 1.0);
  EXPECT_NEAR(compute_sinr(g, 0, unit_budget(1.0, 0.0)), 1.0 / 6.0, 1e-15);
}

TEST(Sinr, MatchesDirectSummation) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(1e-12, 1e-6);
  const auto b = PowerBudget::make(30.0, 50, 9.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> g(7);
    for (auto& x : g) x = u(rng);
    const std::size_t serving = static_cast<std::size_t>(trial % 7);
    double interference = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (j != serving) interference += std::pow(10.0, b.per_rb_power_dbm / 10.0) * g[j];
    const double expected =
        std::pow(10.0, b.per_rb_power_dbm / 10.0) * g[serving] / (interference + std::pow(10.0, b.noise_per_rb_dbm / 10.0));
    EXPECT_NEAR(compute_sinr(g, serving, b), expected, 1e-12 * expected);
  }
}

TEST(Sinr, MonotoneInServingAndInterferers) {
  const auto b = PowerBudget::make(30.0, 50, 9.0);
  std::vector<double> g{1e-8, 1e-9, 2e-9, 3e-9};
  const double base = compute_sinr(g, 0, b);
  g[0] *= 1.1;
  EXPECT_GT(compute_sinr(g, 0, b), base);
  g[0] /= 1.1;
  g[2] *= 1.1;
  EXPECT_LT(compute_sinr(g, 0, b), base);
}

TEST(Rate, Examples) {
  EXPECT_DOUBLE_EQ(rate_bps({}), 0.0);
  const std::vector<double> three{3.0};
  EXPECT_NEAR(rate_bps(three), 360e3, 1e-6);
  const std::vector<double> huge{1e6};
  EXPECT_NEAR(rate_bps(huge), 999e3, 1e-6);
}

TEST(Rate, AdditiveAndMonotone) {
  const std::vector<double> a{0.5, 2.0, 7.0};
  const std::vector<double> b{1.0, 30.0};
  const std::vector<double> ab{0.5, 2.0, 7.0, 1.0, 30.0};
  EXPECT_NEAR(rate_bps(ab), rate_bps(a) + rate_bps(b), 1e-6);
  double prev = 0.0;
  for (double s = 0.0; s < 1e4; s = s * 1.5 + 0.01) {
    const std::vector<double> one{s};
    EXPECT_GE(rate_bps(one), prev);
    prev = rate_bps(one);
  }
}

TEST(Rate, CapIsConfigurable) {
  const RateMap m{kRbBandwidthHz, 4.0};
  EXPECT_DOUBLE_EQ(m.rb_rate_bps(1e9), 720e3);
}

TEST(SinrGrid, RowMajorAccess) {
  SinrGrid g(2, 3);
  g(1, 2) = 5.0;
  EXPECT_EQ(g.row(1)[2], 5.0);
  EXPECT_EQ(g.n_ue(), 2u);
  EXPECT_EQ(g.n_rb(), 3u);
}

}  // namespace
}  // namespace udnsim
