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
 * \file udnsim/scheduler.hpp
 *
 * \brief Downlink RB schedulers for a single serving cell.
 *
 * PF runs in two stages: a time-domain stage keeps the N_max UEs with the
 * largest D/R (potential over past-average throughput), then each RB goes to
 * the candidate with the largest share of its own SINR on that RB.
 *
 * Round-robin variants:
 *  - RR1: one UE per subframe, cycling through all UEs, whole band.
 *  - RR2: band split into equal contiguous blocks over all UEs.
 *  - RR3: the single best UE by D/R gets the whole band.
 *  - RR4: the N_max best UEs by D/R split the band equally.
 * When the band does not divide evenly, the leftover RBs go to a rotating
 * subset of UEs (rotated by subframe index).
 *
 * Ties are broken everywhere by lower past-average rate, then lower UE index.
 */

#ifndef UDNSIM_SCHEDULER_HPP
#define UDNSIM_SCHEDULER_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "udnsim/error.hpp"
#include "udnsim/link.hpp"

namespace udnsim {

enum class SchedulerKind { pf, rr1, rr2, rr3, rr4 };

inline std::string_view to_string(SchedulerKind k) {
  switch (k) {
    case SchedulerKind::pf: return "pf";
    case SchedulerKind::rr1: return "rr1";
    case SchedulerKind::rr2: return "rr2";
    case SchedulerKind::rr3: return "rr3";
    case SchedulerKind::rr4: return "rr4";
  }
  return "?";
}

inline SchedulerKind parse_scheduler(std::string_view s) {
  for (auto k : {SchedulerKind::pf, SchedulerKind::rr1, SchedulerKind::rr2, SchedulerKind::rr3,
                 SchedulerKind::rr4})
    if (to_string(k) == s) return k;
  throw ConfigError("scheduler", "expected one of pf|rr1|rr2|rr3|rr4, got '" + std::string(s) + "'");
}

struct UeSchedState {
  double past_avg_rate_bps = 0.0;      // R
  double wideband_estimate_bps = 0.0;  // D-hat
};

struct AllocationMap {
  std::vector<std::optional<std::size_t>> rb_to_ue;
  std::size_t td_metric_evaluations = 0;
  std::size_t fd_metric_evaluations = 0;

  explicit AllocationMap(std::size_t n_rb = 0) : rb_to_ue(n_rb) {}

  std::size_t n_rb() const { return rb_to_ue.size(); }

  std::vector<std::size_t> rb_counts(std::size_t n_ue) const {
    std::vector<std::size_t> counts(n_ue, 0);
    for (const auto& u : rb_to_ue)
      if (u) ++counts.at(*u);
    return counts;
  }

  std::size_t allocated() const {
    return static_cast<std::size_t>(
        std::count_if(rb_to_ue.begin(), rb_to_ue.end(), [](const auto& u) { return u.has_value(); }));
  }
};

/// N_max = ceil(n_ue / 2), at least 1.
constexpr std::size_t default_n_max(std::size_t n_ue) { return std::max<std::size_t>(1, (n_ue + 1) / 2); }

/// Time-domain PF metric D/R. A non-positive R ranks first.
inline double td_metric(const UeSchedState& ue) {
  if (!(ue.past_avg_rate_bps > 0.0)) return std::numeric_limits<double>::infinity();
  return ue.wideband_estimate_bps / ue.past_avg_rate_bps;
}

/// Exponential moving average of the served rate over a window of t_c subframes.
inline double update_avg(double r_prev, double r_now, double t_c) {
  return (1.0 - 1.0 / t_c) * r_prev + r_now / t_c;
}

/// D-hat: the rate the UE would get on the whole band at the current SINRs.
inline double wideband_estimate(std::span<const double> sinr_row, const RateMap& rates = {}) {
  return rates.rate_bps(sinr_row);
}

namespace detail {

/// True if UE a should be preferred over UE b at equal metric.
inline bool tie_break_before(std::span<const UeSchedState> ues, std::size_t a, std::size_t b) {
  if (ues[a].past_avg_rate_bps != ues[b].past_avg_rate_bps)
    return ues[a].past_avg_rate_bps < ues[b].past_avg_rate_bps;
  return a < b;
}

/// Gives `ues` (in the given order) contiguous blocks covering [0, n_rb).
/// Block sizes differ by at most one; the larger blocks go to positions
/// (rotation + i) mod ues.size() for i < remainder.
inline void split_band(AllocationMap& map, std::span<const std::size_t> ues, std::size_t rotation) {
  const std::size_t n_rb = map.n_rb();
  const std::size_t m = ues.size();
  if (m == 0) return;
  const std::size_t base = n_rb / m;
  const std::size_t extra = n_rb % m;
  const std::size_t first_extra = rotation % m;

  std::size_t rb = 0;
  for (std::size_t pos = 0; pos < m; ++pos) {
    const std::size_t offset = (pos + m - first_extra) % m;
    const std::size_t count = base + (offset < extra ? 1 : 0);
    for (std::size_t i = 0; i < count; ++i) map.rb_to_ue[rb++] = ues[pos];
  }
}

}  // namespace detail

/// The n_max UEs with the highest D/R, best first.
inline std::vector<std::size_t> select_td(std::span<const UeSchedState> ues, std::size_t n_max) {
  if (n_max == 0) throw ConfigError("n_max", "must be at least 1");
  std::vector<double> metric(ues.size());
  for (std::size_t i = 0; i < ues.size(); ++i) metric[i] = td_metric(ues[i]);

  std::vector<std::size_t> order(ues.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (metric[a] != metric[b]) return metric[a] > metric[b];
    return detail::tie_break_before(ues, a, b);
  });
  order.resize(std::min(n_max, order.size()));
  return order;
}

/// Per RB, the candidate with the largest SINR[n,k] / sum_k' SINR[n,k'] wins.
inline AllocationMap pf_fd_allocate(std::span<const std::size_t> candidates,
                                    std::span<const UeSchedState> ues, const SinrGrid& sinr) {
  if (candidates.empty()) throw ConfigError("candidates", "must not be empty");
  const std::size_t n_rb = sinr.n_rb();
  AllocationMap map(n_rb);

  std::vector<double> inv_sum(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const auto row = sinr.row(candidates[c]);
    const double sum = std::accumulate(row.begin(), row.end(), 0.0);
    inv_sum[c] = sum > 0.0 ? 1.0 / sum : 0.0;
  }

  for (std::size_t k = 0; k < n_rb; ++k) {
    std::size_t best = candidates[0];
    double best_metric = sinr(best, k) * inv_sum[0];
    for (std::size_t c = 1; c < candidates.size(); ++c) {
      const std::size_t n = candidates[c];
      const double m = sinr(n, k) * inv_sum[c];
      if (m > best_metric || (m == best_metric && detail::tie_break_before(ues, n, best))) {
        best = n;
        best_metric = m;
      }
    }
    map.rb_to_ue[k] = best;
  }
  map.td_metric_evaluations = 0;
  map.fd_metric_evaluations = candidates.size() * n_rb;
  return map;
}

/// Round-robin variants 1-4 for subframe `t`.
inline AllocationMap rr_allocate(int variant, std::span<const UeSchedState> ues, std::size_t n_rb,
                                 std::size_t t, std::size_t n_max) {
  const std::size_t n_ue = ues.size();
  if (n_ue == 0) throw ConfigError("n_ue", "round robin needs at least one UE");
  AllocationMap map(n_rb);

  switch (variant) {
    case 1: {
      std::fill(map.rb_to_ue.begin(), map.rb_to_ue.end(), t % n_ue);
      break;
    }
    case 2: {
      std::vector<std::size_t> all(n_ue);
      std::iota(all.begin(), all.end(), std::size_t{0});
      detail::split_band(map, all, t);
      break;
    }
    case 3: {
      const auto top = select_td(ues, 1);
      std::fill(map.rb_to_ue.begin(), map.rb_to_ue.end(), top.front());
      map.td_metric_evaluations = n_ue;
      break;
    }
    case 4: {
      auto selected = select_td(ues, n_max);
      std::sort(selected.begin(), selected.end());
      detail::split_band(map, selected, t);
      map.td_metric_evaluations = n_ue;
      break;
    }
    default:
      throw ConfigError("scheduler", "round robin variant must be 1..4");
  }
  return map;
}

/// Past-average rate assigned before the first subframe: one RB at 0 dB SINR.
inline double cold_start_rate(const RateMap& rates = {}) { return rates.rb_rate_bps(1.0); }

/// Scheduler state for one serving cell: per-UE averages plus the subframe
/// counter that drives round-robin rotation. One writer per subframe.
class CellScheduler {
 public:
  struct Step {
    AllocationMap allocation;
    std::vector<double> rates_bps;  // served rate per UE this subframe
  };

  CellScheduler(SchedulerKind kind, std::size_t n_ue, std::size_t n_max, double t_c,
                RateMap rates = {})
      : kind_(kind), n_max_(n_max), t_c_(t_c), rates_(rates),
        states_(n_ue, UeSchedState{cold_start_rate(rates), 0.0}) {
    if (n_ue == 0) throw ConfigError("n_ue", "must be at least 1");
    if (n_max == 0) throw ConfigError("n_max", "must be at least 1");
    if (!(t_c >= 1.0)) throw ConfigError("t_c", "must be at least 1");
  }

  std::span<const UeSchedState> states() const { return states_; }
  std::size_t subframe() const { return subframe_; }

  AllocationMap allocate(const SinrGrid& sinr) {
    for (std::size_t n = 0; n < states_.size(); ++n)
      states_[n].wideband_estimate_bps = wideband_estimate(sinr.row(n), rates_);

    switch (kind_) {
      case SchedulerKind::pf: {
        const auto candidates = select_td(states_, n_max_);
        auto map = pf_fd_allocate(candidates, states_, sinr);
        map.td_metric_evaluations = states_.size();
        return map;
      }
      case SchedulerKind::rr1: return rr_allocate(1, states_, sinr.n_rb(), subframe_, n_max_);
      case SchedulerKind::rr2: return rr_allocate(2, states_, sinr.n_rb(), subframe_, n_max_);
      case SchedulerKind::rr3: return rr_allocate(3, states_, sinr.n_rb(), subframe_, n_max_);
      case SchedulerKind::rr4: return rr_allocate(4, states_, sinr.n_rb(), subframe_, n_max_);
    }
    return AllocationMap(sinr.n_rb());
  }

  /// Allocates, computes served rates, and applies the moving-average update
  /// to every UE (unserved UEs average in a zero rate).
  Step step(const SinrGrid& sinr) {
    Step out{allocate(sinr), std::vector<double>(states_.size(), 0.0)};
    for (std::size_t k = 0; k < out.allocation.n_rb(); ++k)
      if (const auto& ue = out.allocation.rb_to_ue[k]) out.rates_bps[*ue] += rates_.rb_rate_bps(sinr(*ue, k));
    for (std::size_t n = 0; n < states_.size(); ++n)
      states_[n].past_avg_rate_bps = update_avg(states_[n].past_avg_rate_bps, out.rates_bps[n], t_c_);
    ++subframe_;
    return out;
  }

 private:
  SchedulerKind kind_;
  std::size_t n_max_;
  double t_c_;
  RateMap rates_;
  std::vector<UeSchedState> states_;
  std::size_t subframe_ = 0;
};

}  // namespace udnsim

#endif  // UDNSIM_SCHEDULER_HPP
