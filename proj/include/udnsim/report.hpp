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
 * \file udnsim/report.hpp
 *
 * \brief CSV reports.
 *
 * Doubles are written in shortest round-trip form, so reading campaign.csv
 * back and summarizing it reproduces summary.csv byte for byte. Nothing
 * run-dependent (time, host, worker count) is ever written.
 *
 *   campaign.csv   drop_id,ue_id,isd_m,n_tiers,n_ue,scheduler,fading_model,mean_sinr_db,throughput_bps
 *   summary.csv    isd_m,n_tiers,n_ue,scheduler,fading_model,mean_cell_tput_bps,
 *                  mean_ue_tput_bps,p05_ue_tput_bps,p50_ue_tput_bps
 *   cdf_<m>.csv    value,cumulative_probability
 *   gain_table.csv isd_m,n_ue,metric,baseline_value,comparison_value,ratio
 */

#ifndef UDNSIM_REPORT_HPP
#define UDNSIM_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "udnsim/config.hpp"
#include "udnsim/engine.hpp"
#include "udnsim/error.hpp"
#include "udnsim/result.hpp"
#include "udnsim/stats.hpp"

namespace udnsim {

inline constexpr std::string_view kCampaignHeader =
    "drop_id,ue_id,isd_m,n_tiers,n_ue,scheduler,fading_model,mean_sinr_db,throughput_bps";
inline constexpr std::string_view kSummaryHeader =
    "isd_m,n_tiers,n_ue,scheduler,fading_model,mean_cell_tput_bps,mean_ue_tput_bps,"
    "p05_ue_tput_bps,p50_ue_tput_bps";
inline constexpr std::string_view kCdfHeader = "value,cumulative_probability";
inline constexpr std::string_view kGainHeader =
    "isd_m,n_ue,metric,baseline_value,comparison_value,ratio";

namespace detail {

/// The sweepable axes of a config as CSV fields, in summary column order.
inline std::string axis_fields(const ScenarioConfig& c) {
  return format_double(c.isd_m) + "," + std::to_string(c.n_tiers) + "," + std::to_string(c.n_ue) +
         "," + std::string(to_string(c.scheduler)) + "," + std::string(to_string(c.fading_model));
}

inline std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline void expect_header(std::istream& in, std::string_view header, std::string_view file) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != header)
    throw IoError(std::string(file) + ": expected header '" + std::string(header) + "'");
}

}  // namespace detail

/// Short filesystem-safe label, e.g. "isd40_tiers1_ue4_pf_rician".
inline std::string campaign_label(const ScenarioConfig& c) {
  return "isd" + detail::format_double(c.isd_m) + "_tiers" + std::to_string(c.n_tiers) + "_ue" +
         std::to_string(c.n_ue) + "_" + std::string(to_string(c.scheduler)) + "_" +
         std::string(to_string(c.fading_model));
}

inline void write_campaign_csv(std::ostream& out, std::span<const CampaignResult> campaigns) {
  out << kCampaignHeader << '\n';
  for (const auto& c : campaigns) {
    const std::string axes = detail::axis_fields(c.config);
    for (const auto& d : c.drops)
      for (std::size_t u = 0; u < d.per_ue_throughput_bps.size(); ++u)
        out << d.drop_index << ',' << u << ',' << axes << ','
            << detail::format_double(d.per_ue_mean_sinr_db[u]) << ','
            << detail::format_double(d.per_ue_throughput_bps[u]) << '\n';
  }
}

inline void write_summary_csv(std::ostream& out, std::span<const CampaignResult> campaigns) {
  out << kSummaryHeader << '\n';
  for (const auto& c : campaigns) {
    const auto& s = c.stats;
    out << detail::axis_fields(c.config) << ',' << detail::format_double(s.mean_cell_tput_bps) << ','
        << detail::format_double(s.mean_ue_tput_bps) << ',' << detail::format_double(s.p05_ue_tput_bps)
        << ',' << detail::format_double(s.p50_ue_tput_bps) << '\n';
  }
}

inline void write_cdf_csv(std::ostream& out, const Cdf& cdf) {
  out << kCdfHeader << '\n';
  for (std::size_t i = 0; i < cdf.size(); ++i)
    out << detail::format_double(cdf.values[i]) << ',' << detail::format_double(cdf.probabilities[i])
        << '\n';
}

inline void write_gain_table_csv(std::ostream& out, const GainTable& table) {
  out << kGainHeader << '\n';
  for (const auto& r : table)
    out << detail::format_double(r.isd_m) << ',' << r.n_ue << ',' << r.metric_name << ','
        << detail::format_double(r.baseline_value) << ',' << detail::format_double(r.comparison_value)
        << ',' << detail::format_double(r.ratio) << '\n';
}

/// Rebuilds campaigns from campaign.csv. Rows are grouped by their axis
/// fields (in order of first appearance), each group's config is `base` with
/// those axes applied, and the stats are recomputed from the drops.
inline std::vector<CampaignResult> read_campaign_csv(std::istream& in, const ScenarioConfig& base = {}) {
  detail::expect_header(in, kCampaignHeader, "campaign.csv");
  std::vector<CampaignResult> campaigns;
  std::map<std::string, std::size_t> by_axes;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const auto f = detail::split_csv(detail::trim(line));
    const auto where = "campaign.csv:" + std::to_string(line_no);
    if (f.size() != 9) throw IoError(where + ": expected 9 fields");
    try {
      const std::string axes = std::string(f[2]) + "," + std::string(f[3]) + "," + std::string(f[4]) +
                               "," + std::string(f[5]) + "," + std::string(f[6]);
      auto [it, fresh] = by_axes.try_emplace(axes, campaigns.size());
      if (fresh) {
        CampaignResult c;
        c.config = base;
        set_config_value(c.config, "isd_m", f[2]);
        set_config_value(c.config, "n_tiers", f[3]);
        set_config_value(c.config, "n_ue", f[4]);
        set_config_value(c.config, "scheduler", f[5]);
        set_config_value(c.config, "fading_model", f[6]);
        campaigns.push_back(std::move(c));
      }
      auto& c = campaigns[it->second];
      const auto drop = detail::parse_int<std::uint64_t>("drop_id", f[0]);
      const auto ue = detail::parse_int<std::size_t>("ue_id", f[1]);
      if (c.drops.empty() || c.drops.back().drop_index != drop) {
        c.drops.push_back({});
        c.drops.back().drop_index = drop;
      }
      auto& d = c.drops.back();
      if (ue != d.per_ue_throughput_bps.size()) throw IoError(where + ": UE rows out of order");
      d.per_ue_mean_sinr_db.push_back(detail::parse_double("mean_sinr_db", f[7]));
      d.per_ue_throughput_bps.push_back(detail::parse_double("throughput_bps", f[8]));
    } catch (const ConfigError& e) {
      throw IoError(where + ": " + e.what());
    }
  }
  for (auto& c : campaigns) {
    for (auto& d : c.drops) {
      d.cell_throughput_bps = 0.0;
      for (double x : d.per_ue_throughput_bps) d.cell_throughput_bps += x;
    }
    c.config.n_drops = static_cast<int>(c.drops.size());
    c.stats = summarize(c.drops);
  }
  return campaigns;
}

inline void write_layout_csv(std::ostream& out, const DropChannel& ch) {
  out << "kind,index,x_m,y_m,height_m\n";
  for (std::size_t b = 0; b < ch.layout.n_bs(); ++b)
    out << (b == ch.layout.serving_index ? "serving_bs" : "bs") << ',' << b << ','
        << detail::format_double(ch.layout.bs_positions[b].x) << ','
        << detail::format_double(ch.layout.bs_positions[b].y) << ','
        << detail::format_double(ch.layout.bs_height_m) << '\n';
  for (std::size_t u = 0; u < ch.ues.positions.size(); ++u)
    out << "ue," << u << ',' << detail::format_double(ch.ues.positions[u].x) << ','
        << detail::format_double(ch.ues.positions[u].y) << ','
        << detail::format_double(ch.ues.ue_height_m) << '\n';
}

/// Per-link large-scale state of a drop.
inline void write_links_csv(std::ostream& out, const DropChannel& ch) {
  out << "ue,bs,distance_2d_m,distance_3d_m,is_los,path_loss_db,shadowing_db,antenna_gain_db,rician_k\n";
  for (std::size_t u = 0; u < ch.links.size(); ++u)
    for (std::size_t b = 0; b < ch.links[u].size(); ++b) {
      const auto& l = ch.links[u][b];
      out << u << ',' << b << ',' << detail::format_double(l.distance_2d_m) << ','
          << detail::format_double(l.distance_3d_m) << ',' << (l.is_los ? 1 : 0) << ','
          << detail::format_double(l.path_loss_db) << ',' << detail::format_double(l.shadowing_db) << ','
          << detail::format_double(l.antenna_gain_db) << ',' << detail::format_double(l.rician_k) << '\n';
    }
}

/// Every (subframe, RB, UE) SINR of a traced drop and whether that UE got the RB.
inline void write_trace_csv(std::ostream& out, const DropTrace& trace) {
  out << "subframe,rb,ue,sinr_db,allocated\n";
  for (std::size_t t = 0; t < trace.sinr.size(); ++t) {
    const auto& grid = trace.sinr[t];
    const auto& alloc = trace.allocations[t];
    for (std::size_t k = 0; k < grid.n_rb(); ++k)
      for (std::size_t u = 0; u < grid.n_ue(); ++u)
        out << t << ',' << k << ',' << u << ',' << detail::format_double(linear_to_db(grid(u, k))) << ','
            << (alloc.rb_to_ue[k] == u ? 1 : 0) << '\n';
  }
}

namespace detail {

template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  writer(out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace detail

/// Writes campaign.csv, summary.csv and the CDF files into `dir`. With one
/// campaign the CDFs are cdf_ue_tput_bps.csv and cdf_sinr_db.csv; with several,
/// each name gets a campaign_label() suffix. gain_table.csv is written when
/// `gains` is non-empty.
inline void write_report(const std::filesystem::path& dir, std::span<const CampaignResult> campaigns,
                         const GainTable& gains = {}) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());
  detail::write_file(dir / "campaign.csv", [&](std::ostream& o) { write_campaign_csv(o, campaigns); });
  detail::write_file(dir / "summary.csv", [&](std::ostream& o) { write_summary_csv(o, campaigns); });
  for (const auto& c : campaigns) {
    const std::string suffix = campaigns.size() == 1 ? "" : "_" + campaign_label(c.config);
    detail::write_file(dir / ("cdf_ue_tput_bps" + suffix + ".csv"),
                       [&](std::ostream& o) { write_cdf_csv(o, c.stats.ue_tput_cdf); });
    detail::write_file(dir / ("cdf_sinr_db" + suffix + ".csv"),
                       [&](std::ostream& o) { write_cdf_csv(o, c.stats.sinr_cdf); });
  }
  if (!gains.empty())
    detail::write_file(dir / "gain_table.csv", [&](std::ostream& o) { write_gain_table_csv(o, gains); });
}

inline std::string to_csv(std::span<const CampaignResult> campaigns,
                          void (*writer)(std::ostream&, std::span<const CampaignResult>)) {
  std::ostringstream out;
  writer(out, campaigns);
  return out.str();
}

}  // namespace udnsim

#endif  // UDNSIM_REPORT_HPP
