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

#ifndef UDNSIM_LINK_HPP
#define UDNSIM_LINK_HPP

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "udnsim/channel.hpp"
#include "udnsim/error.hpp"

namespace udnsim {

inline constexpr double kRbBandwidthHz = 180e3;
inline constexpr double kThermalNoiseDbmPerHz = -174.0;

/// Per-RB transmit power and receiver noise. Interfering BSs transmit at the
/// same per-RB power on every RB (full buffer).
struct PowerBudget {
  double bs_tx_power_dbm = 30.0;
  double per_rb_power_dbm = 0.0;
  double noise_figure_db = 9.0;
  double noise_per_rb_dbm = 0.0;
  double per_rb_power_mw = 0.0;
  double noise_per_rb_mw = 0.0;

  static PowerBudget make(double tx_power_dbm, std::size_t n_rb, double noise_figure_db) {
    if (n_rb == 0) throw ConfigError("n_rb", "must be positive");
    PowerBudget b;
    b.bs_tx_power_dbm = tx_power_dbm;
    b.per_rb_power_dbm = tx_power_dbm - 10.0 * std::log10(static_cast<double>(n_rb));
    b.noise_figure_db = noise_figure_db;
    b.noise_per_rb_dbm =
        kThermalNoiseDbmPerHz + 10.0 * std::log10(kRbBandwidthHz) + noise_figure_db;
    b.per_rb_power_mw = db_to_linear(b.per_rb_power_dbm);
    b.noise_per_rb_mw = db_to_linear(b.noise_per_rb_dbm);
    return b;
  }
};

/// SINR of one UE on one RB. `channel_gains` holds the composite linear gain
/// (antenna x path loss x shadowing x fast fading) towards every BS; the
/// serving entry is excluded from the interference sum.
inline double compute_sinr(std::span<const double> channel_gains, std::size_t serving,
                           const PowerBudget& budget) {
  assert(serving < channel_gains.size());
  const double p = budget.per_rb_power_mw;
  double interference = 0.0;
  for (std::size_t j = 0; j < channel_gains.size(); ++j)
    if (j != serving) interference += p * channel_gains[j];
  return p * channel_gains[serving] / (interference + budget.noise_per_rb_mw);
}

/// Truncated-Shannon map from SINR to rate.
struct RateMap {
  double rb_bandwidth_hz = kRbBandwidthHz;
  double eta_max = 5.55;  // bps/Hz, 64-QAM ceiling

  double spectral_efficiency(double sinr) const {
    return std::min(std::log2(1.0 + sinr), eta_max);
  }

  double rb_rate_bps(double sinr) const { return rb_bandwidth_hz * spectral_efficiency(sinr); }

  /// Sum over the allocated RBs; an empty allocation yields 0.
  double rate_bps(std::span<const double> sinr_per_allocated_rb) const {
    double total = 0.0;
    for (double s : sinr_per_allocated_rb) total += rb_rate_bps(s);
    return total;
  }
};

inline double rate_bps(std::span<const double> sinr_per_allocated_rb) {
  return RateMap{}.rate_bps(sinr_per_allocated_rb);
}

/// Linear SINR per (UE, RB) for one subframe, row-major by UE.
class SinrGrid {
 public:
  SinrGrid() = default;
  SinrGrid(std::size_t n_ue, std::size_t n_rb, double fill = 0.0)
      : n_ue_(n_ue), n_rb_(n_rb), values_(n_ue * n_rb, fill) {}

  std::size_t n_ue() const { return n_ue_; }
  std::size_t n_rb() const { return n_rb_; }

  double& operator()(std::size_t ue, std::size_t rb) { return values_[ue * n_rb_ + rb]; }
  double operator()(std::size_t ue, std::size_t rb) const { return values_[ue * n_rb_ + rb]; }

  std::span<const double> row(std::size_t ue) const {
    return std::span<const double>(values_).subspan(ue * n_rb_, n_rb_);
  }
  std::span<double> row(std::size_t ue) {
    return std::span<double>(values_).subspan(ue * n_rb_, n_rb_);
  }

 private:
  std::size_t n_ue_ = 0;
  std::size_t n_rb_ = 0;
  std::vector<double> values_;
};

}  // namespace udnsim

#endif  // UDNSIM_LINK_HPP
