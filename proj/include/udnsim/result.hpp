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

#ifndef UDNSIM_RESULT_HPP
#define UDNSIM_RESULT_HPP

#include <cstdint>
#include <vector>

#include "udnsim/config.hpp"

namespace udnsim {

/// Empirical CDF: ascending values with probability i/n at the i-th order statistic.
struct Cdf {
  std::vector<double> values;
  std::vector<double> probabilities;

  std::size_t size() const { return values.size(); }
};

/// Outcome of one Monte-Carlo drop, collected at the central cell only.
struct DropResult {
  std::uint64_t drop_index = 0;
  std::vector<double> per_ue_throughput_bps;  // averaged over the drop's subframes
  std::vector<double> per_ue_mean_sinr_db;    // 10 log10 of the mean linear SINR over RBs and subframes
  double cell_throughput_bps = 0.0;           // sum of per_ue_throughput_bps in UE order
};

struct CampaignStats {
  double mean_cell_tput_bps = 0.0;
  double cell_tput_std_error_bps = 0.0;
  double mean_ue_tput_bps = 0.0;  // mean over UEs within a drop, then over drops
  double p05_ue_tput_bps = 0.0;
  double p50_ue_tput_bps = 0.0;
  double median_sinr_db = 0.0;
  Cdf ue_tput_cdf;  // per-UE per-drop throughput samples
  Cdf sinr_cdf;     // per-UE per-drop mean SINR samples (dB)
};

struct CampaignResult {
  ScenarioConfig config;
  std::vector<DropResult> drops;
  CampaignStats stats;
};

}  // namespace udnsim

#endif  // UDNSIM_RESULT_HPP
