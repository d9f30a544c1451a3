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
 * \file udnsim/engine.hpp
 *
 * \brief Monte-Carlo drops, campaigns and sweeps.
 *
 * A drop places the UEs, realizes the large-scale channel (LOS state, path
 * loss, antenna gain, shadowing) once, then runs `n_subframes` subframes of
 * fast fading, SINR evaluation and scheduling.
 *
 * Random streams are keyed by (master seed, drop index, purpose[, UE]). None
 * of them depends on the scheduler, so campaigns that differ only in the
 * scheduler or fading model see the same UE positions, LOS states, shadowing
 * and normal/phase draws (common random numbers). The per-UE fading streams
 * also make the first k UEs of a drop identical across UE counts.
 */

#ifndef UDNSIM_ENGINE_HPP
#define UDNSIM_ENGINE_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "udnsim/channel.hpp"
#include "udnsim/config.hpp"
#include "udnsim/geometry.hpp"
#include "udnsim/link.hpp"
#include "udnsim/result.hpp"
#include "udnsim/rng.hpp"
#include "udnsim/scheduler.hpp"
#include "udnsim/stats.hpp"

namespace udnsim {

inline ChannelModel make_channel_model(const ScenarioConfig& cfg, const Layout& layout) {
  ChannelModel model;
  model.carrier_ghz = cfg.carrier_ghz;
  model.path_loss = cfg.path_loss;
  model.rayleigh = cfg.fading_model == FadingModel::rayleigh;
  model.los_model = cfg.los_model;
  if (cfg.antenna_calibration == AntennaCalibration::upper_ray) {
    model.antenna = AntennaPattern::upper_ray(cfg.alpha_deg,
                                              cfg.antenna_beamwidth_deg.value_or(kDefaultBeamwidthDeg),
                                              cfg.antenna_max_gain_dbi, cfg.antenna_side_lobe_db);
  } else {
    model.antenna = AntennaPattern::calibrated(layout.cell_radius_m(), layout.bs_height_m, cfg.h_ue_m,
                                               cfg.antenna_max_gain_dbi, cfg.antenna_side_lobe_db);
  }
  if (cfg.antenna_tilt_deg) model.antenna.tilt_deg = *cfg.antenna_tilt_deg;
  if (cfg.antenna_beamwidth_deg) model.antenna.beamwidth_3db_deg = *cfg.antenna_beamwidth_deg;
  return model;
}

/// Large-scale channel of one drop. Fixed for all subframes.
struct DropChannel {
  Layout layout;
  UeDrop ues;
  ChannelModel model;
  std::vector<std::vector<LinkState>> links;             // [ue][bs]
  std::vector<std::vector<double>> large_scale_gain;     // [ue][bs], linear
  std::vector<std::vector<RicianFading>> fading;         // [ue][bs]
};

inline DropChannel realize_channel(const ScenarioConfig& cfg, std::uint64_t drop_index) {
  DropChannel ch;
  const double bs_height = bs_antenna_height(cfg.isd_m, cfg.alpha_deg, cfg.h_ue_m);
  ch.layout = build_hex_grid(cfg.isd_m, cfg.n_tiers, bs_height);
  ch.model = make_channel_model(cfg, ch.layout);

  const auto n_ue = static_cast<std::size_t>(cfg.n_ue);
  const std::size_t n_bs = ch.layout.n_bs();

  auto ue_rng = make_stream(cfg.master_seed, drop_index, StreamPurpose::ue_drop);
  ch.ues = drop_ues(ch.layout, n_ue, ue_rng, cfg.h_ue_m);

  auto los_rng = make_stream(cfg.master_seed, drop_index, StreamPurpose::los_state);
  auto shadow_rng = make_stream(cfg.master_seed, drop_index, StreamPurpose::shadowing);
  UniformDistribution unit(0.0, 1.0);
  const double rho = shadow_cross_correlation(cfg.isd_m, cfg.d_cor_m);

  ch.links.assign(n_ue, {});
  ch.large_scale_gain.assign(n_ue, std::vector<double>(n_bs));
  ch.fading.assign(n_ue, std::vector<RicianFading>(n_bs));
  for (std::size_t u = 0; u < n_ue; ++u) {
    const auto shadow = sample_shadowing(n_bs, rho, cfg.shadow_sigma_db, shadow_rng);
    ch.links[u].reserve(n_bs);
    for (std::size_t b = 0; b < n_bs; ++b) {
      const double d2 = distance(ch.layout.bs_positions[b], ch.ues.positions[u]);
      const bool is_los = unit(los_rng) < p_los(d2);
      const auto link = ch.model.link(ch.layout.bs_positions[b], ch.layout.bs_height_m,
                                      ch.ues.positions[u], cfg.h_ue_m, is_los, shadow.values_db[b]);
      ch.links[u].push_back(link);
      ch.large_scale_gain[u][b] = db_to_linear(link.large_scale_gain_db());
      ch.fading[u][b] = RicianFading::from_k(link.rician_k);
    }
  }
  return ch;
}

/// Optional per-drop record of every SINR grid and allocation.
struct DropTrace {
  DropChannel channel;
  std::vector<SinrGrid> sinr;
  std::vector<AllocationMap> allocations;
};

inline DropResult run_drop(const ScenarioConfig& cfg, std::uint64_t drop_index,
                           DropTrace* trace = nullptr) {
  validate(cfg);
  DropChannel ch = realize_channel(cfg, drop_index);

  const auto n_ue = static_cast<std::size_t>(cfg.n_ue);
  const auto n_rb = static_cast<std::size_t>(cfg.n_rb);
  const std::size_t n_bs = ch.layout.n_bs();
  const std::size_t serving = ch.layout.serving_index;
  const auto budget = PowerBudget::make(cfg.tx_power_dbm, n_rb, cfg.noise_figure_db);
  const RateMap rates{kRbBandwidthHz, cfg.eta_max};

  std::vector<Rng> fading_rng;
  fading_rng.reserve(n_ue);
  for (std::size_t u = 0; u < n_ue; ++u)
    fading_rng.push_back(make_stream(cfg.master_seed, drop_index, StreamPurpose::fading, u));
  std::vector<FadingSampler> samplers(n_ue);

  CellScheduler scheduler(cfg.scheduler, n_ue, cfg.resolved_n_max(), cfg.t_c, rates);
  SinrGrid grid(n_ue, n_rb);
  std::vector<double> gains(n_bs);
  std::vector<double> sinr_sum(n_ue, 0.0);
  std::vector<double> rate_sum(n_ue, 0.0);

  for (int t = 0; t < cfg.n_subframes; ++t) {
    for (std::size_t u = 0; u < n_ue; ++u) {
      const auto& ls = ch.large_scale_gain[u];
      const auto& fad = ch.fading[u];
      for (std::size_t k = 0; k < n_rb; ++k) {
        for (std::size_t b = 0; b < n_bs; ++b) gains[b] = ls[b] * samplers[u](fad[b], fading_rng[u]);
        const double s = compute_sinr(gains, serving, budget);
        grid(u, k) = s;
        sinr_sum[u] += s;
      }
    }
    auto step = scheduler.step(grid);
    for (std::size_t u = 0; u < n_ue; ++u) rate_sum[u] += step.rates_bps[u];
    if (trace) {
      trace->sinr.push_back(grid);
      trace->allocations.push_back(std::move(step.allocation));
    }
  }

  DropResult r;
  r.drop_index = drop_index;
  r.per_ue_throughput_bps.resize(n_ue);
  r.per_ue_mean_sinr_db.resize(n_ue);
  const double n_sf = static_cast<double>(cfg.n_subframes);
  for (std::size_t u = 0; u < n_ue; ++u) {
    r.per_ue_throughput_bps[u] = rate_sum[u] / n_sf;
    r.per_ue_mean_sinr_db[u] = linear_to_db(sinr_sum[u] / (n_sf * static_cast<double>(n_rb)));
  }
  r.cell_throughput_bps = 0.0;
  for (double x : r.per_ue_throughput_bps) r.cell_throughput_bps += x;
  if (trace) trace->channel = std::move(ch);
  return r;
}

/// Worker count used when the caller passes 0.
inline unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Runs cfg.n_drops drops (indices 0..n-1) over a pool of `workers` threads.
/// Results are stored by drop index, so the output is identical for any
/// worker count.
inline CampaignResult run_campaign(const ScenarioConfig& cfg, unsigned workers = 0) {
  validate(cfg);
  CampaignResult out;
  out.config = cfg;
  const auto n = static_cast<std::size_t>(cfg.n_drops);
  out.drops.resize(n);

  if (workers == 0) workers = default_workers();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out.drops[i] = run_drop(cfg, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  out.stats = summarize(out.drops);
  return out;
}

inline CampaignResult run_campaign(ScenarioConfig cfg, int n_drops, std::uint64_t master_seed,
                                   unsigned workers = 0) {
  cfg.n_drops = n_drops;
  cfg.master_seed = master_seed;
  return run_campaign(cfg, workers);
}

/// Maps a sweep axis name to its config key ("isd" is accepted for "isd_m").
inline std::string sweep_axis_key(std::string_view axis) {
  if (axis == "isd") return "isd_m";
  return std::string(axis);
}

inline bool is_sweep_axis(std::string_view axis) {
  return comparable_axes().contains(sweep_axis_key(axis));
}

/// One campaign per value of `axis`; every campaign keeps base.master_seed,
/// so they share their random streams.
inline std::vector<CampaignResult> run_sweep(const ScenarioConfig& base, std::string_view axis,
                                             const std::vector<std::string>& values,
                                             unsigned workers = 0) {
  if (!is_sweep_axis(axis))
    throw ConfigError("axis", "cannot sweep '" + std::string(axis) +
                                  "'; expected isd_m|n_ue|scheduler|fading_model|n_tiers");
  std::vector<CampaignResult> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    ScenarioConfig cfg = base;
    set_config_value(cfg, sweep_axis_key(axis), v);
    validate(cfg);
    out.push_back(run_campaign(cfg, workers));
  }
  return out;
}

}  // namespace udnsim

#endif  // UDNSIM_ENGINE_HPP
