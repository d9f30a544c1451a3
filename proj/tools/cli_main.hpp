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

// Command-line front end. Kept in a header so the tests can drive it in-process.

#ifndef UDNSIM_TOOLS_CLI_MAIN_HPP
#define UDNSIM_TOOLS_CLI_MAIN_HPP

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "udnsim/config.hpp"
#include "udnsim/engine.hpp"
#include "udnsim/presets.hpp"
#include "udnsim/report.hpp"

namespace udnsim::cli {

inline constexpr const char* kOutDirEnv = "UDNSIM_OUT_DIR";

struct ConfigFlags {
  std::string config_path;
  std::vector<std::string> assignments;
  std::optional<std::uint64_t> seed;
  std::optional<int> drops;

  void attach(CLI::App& app) {
    app.add_option("-c,--config", config_path, "key = value config file")->check(CLI::ExistingFile);
    app.add_option("-s,--set", assignments, "override one key, e.g. --set isd_m=70 (repeatable)");
    app.add_option("--seed", seed, "master seed");
    app.add_option("--drops", drops, "number of Monte-Carlo drops");
  }

  /// File values first, then --set, then --seed/--drops.
  ScenarioConfig resolve(ScenarioConfig base = {}) const {
    ScenarioConfig cfg = config_path.empty() ? base : load_config_file(config_path, base);
    for (const auto& a : assignments) apply_assignment(cfg, a);
    if (seed) cfg.master_seed = *seed;
    if (drops) cfg.n_drops = *drops;
    validate(cfg);
    return cfg;
  }
};

inline std::filesystem::path default_out_dir() {
  if (const char* env = std::getenv(kOutDirEnv); env && *env) return env;
  return "udnsim_out";
}

inline void print_summary(std::ostream& out, const std::vector<CampaignResult>& campaigns) {
  out << std::left << std::setw(34) << "campaign" << std::right << std::setw(14) << "cell_Mbps"
      << std::setw(12) << "ue_Mbps" << std::setw(12) << "p05_Mbps" << std::setw(14) << "medSINR_dB" << '\n';
  out << std::fixed << std::setprecision(3);
  for (const auto& c : campaigns)
    out << std::left << std::setw(34) << campaign_label(c.config) << std::right << std::setw(14)
        << c.stats.mean_cell_tput_bps / 1e6 << std::setw(12) << c.stats.mean_ue_tput_bps / 1e6
        << std::setw(12) << c.stats.p05_ue_tput_bps / 1e6 << std::setw(14) << c.stats.median_sinr_db
        << '\n';
  out << std::defaultfloat;
}

inline std::vector<std::string> split_values(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline int cli_main(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"udnsim: downlink ultra-dense small-cell simulator"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "run one campaign");
  ConfigFlags run_flags;
  run_flags.attach(*run);
  std::string run_out;
  unsigned run_workers = 0;
  std::optional<std::uint64_t> dump_layout;
  std::optional<std::uint64_t> trace_drop;
  run->add_option("-o,--out", run_out, "output directory (default $UDNSIM_OUT_DIR or ./udnsim_out)");
  run->add_option("-w,--workers", run_workers, "worker threads (0: hardware concurrency)");
  run->add_option("--dump-layout", dump_layout, "write layout.csv and links.csv for this drop index");
  run->add_option("--trace-drop", trace_drop, "write trace.csv (SINR + allocation) for this drop index");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run a preset or a one-axis sweep");
  ConfigFlags sweep_flags;
  sweep_flags.attach(*sweep);
  std::string sweep_out, preset_name, axis, values;
  unsigned sweep_workers = 0;
  bool list_presets = false;
  sweep->add_option("-o,--out", sweep_out, "output directory");
  sweep->add_option("-w,--workers", sweep_workers, "worker threads (0: hardware concurrency)");
  sweep->add_option("-p,--preset", preset_name, "named preset (tiers, fig3 .. fig7)");
  sweep->add_option("--axis", axis, "axis: isd_m|n_ue|scheduler|fading_model|n_tiers");
  sweep->add_option("--values", values, "comma-separated axis values");
  sweep->add_flag("--list", list_presets, "list presets and exit");

  // report
  auto* report = app.add_subcommand("report", "recompute summary, CDFs and gains from campaign.csv");
  std::string report_in, report_out, report_config, report_preset;
  report->add_option("input", report_in, "campaign.csv")->required()->check(CLI::ExistingFile);
  report->add_option("-o,--out", report_out, "output directory (default: the input's directory)");
  report->add_option("-c,--config", report_config, "base config the campaigns were run with")
      ->check(CLI::ExistingFile);
  report->add_option("-p,--preset", report_preset, "also write the preset's gain_table.csv");

  // validate
  auto* val = app.add_subcommand("validate", "check a config and print the resolved values");
  ConfigFlags val_flags;
  val_flags.attach(*val);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*val) {
      out << serialize_config(val_flags.resolve());
      return 0;
    }

    if (*run) {
      const ScenarioConfig cfg = run_flags.resolve();
      const std::filesystem::path dir = run_out.empty() ? default_out_dir() : std::filesystem::path(run_out);
      std::vector<CampaignResult> campaigns{run_campaign(cfg, run_workers)};
      write_report(dir, campaigns);
      detail::write_file(dir / "config.txt", [&](std::ostream& o) { o << serialize_config(cfg); });
      if (dump_layout) {
        DropTrace t;
        run_drop(cfg, *dump_layout, &t);
        detail::write_file(dir / "layout.csv", [&](std::ostream& o) { write_layout_csv(o, t.channel); });
        detail::write_file(dir / "links.csv", [&](std::ostream& o) { write_links_csv(o, t.channel); });
      }
      if (trace_drop) {
        DropTrace t;
        run_drop(cfg, *trace_drop, &t);
        detail::write_file(dir / "trace.csv", [&](std::ostream& o) { write_trace_csv(o, t); });
      }
      print_summary(out, campaigns);
      out << "wrote " << dir.string() << '\n';
      return 0;
    }

    if (*sweep) {
      if (list_presets) {
        for (const auto& p : presets())
          out << p.name << ": " << p.description << " (" << expand_preset(p).size() << " campaigns)\n";
        return 0;
      }
      if (preset_name.empty() == axis.empty())
        throw ConfigError("preset", "give exactly one of --preset or --axis/--values");

      std::vector<ScenarioConfig> grid;
      std::vector<GainSpec> gain_specs;
      if (!preset_name.empty()) {
        const Preset p = find_preset(preset_name);
        grid = expand_grid(sweep_flags.resolve(p.base), p.axes);
        gain_specs = p.gains;
      } else {
        if (values.empty()) throw ConfigError("values", "required with --axis");
        if (!is_sweep_axis(axis))
          throw ConfigError("axis", "cannot sweep '" + axis + "'; expected isd_m|n_ue|scheduler|fading_model|n_tiers");
        grid = expand_grid(sweep_flags.resolve(), {{sweep_axis_key(axis), split_values(values)}});
      }

      std::vector<CampaignResult> campaigns;
      campaigns.reserve(grid.size());
      for (const auto& cfg : grid) {
        campaigns.push_back(run_campaign(cfg, sweep_workers));
        err << "done " << campaign_label(cfg) << '\n';
      }
      GainTable gains;
      for (const auto& spec : gain_specs) {
        auto rows = build_gain_table(campaigns, spec);
        gains.insert(gains.end(), rows.begin(), rows.end());
      }
      const std::filesystem::path dir = sweep_out.empty() ? default_out_dir() : std::filesystem::path(sweep_out);
      write_report(dir, campaigns, gains);
      print_summary(out, campaigns);
      out << "wrote " << dir.string() << '\n';
      return 0;
    }

    if (*report) {
      ScenarioConfig base;
      if (!report_preset.empty()) base = find_preset(report_preset).base;
      if (!report_config.empty()) base = load_config_file(report_config, base);
      std::ifstream in(report_in, std::ios::binary);
      if (!in) throw IoError("cannot open '" + report_in + "'");
      const auto campaigns = read_campaign_csv(in, base);
      if (campaigns.empty()) throw IoError(report_in + ": no rows");
      GainTable gains;
      if (!report_preset.empty())
        for (const auto& spec : find_preset(report_preset).gains) {
          auto rows = build_gain_table(campaigns, spec);
          gains.insert(gains.end(), rows.begin(), rows.end());
        }
      const std::filesystem::path dir =
          report_out.empty() ? std::filesystem::path(report_in).parent_path() : std::filesystem::path(report_out);
      write_report(dir.empty() ? "." : dir, campaigns, gains);
      print_summary(out, campaigns);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace udnsim::cli

#endif  // UDNSIM_TOOLS_CLI_MAIN_HPP
