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
 * \file udnsim/channel.hpp
 *
 * \brief Channel components for dense small-cell links.
 *
 * Deterministic pieces (LOS probability, distance-dependent Rician K factor,
 * ISD-dependent shadowing cross-correlation, urban-micro path loss, elevation
 * antenna pattern) are plain functions. Random pieces (fast fading, shadowing)
 * take an explicit generator so every stream is reproducible.
 */

#ifndef UDNSIM_CHANNEL_HPP
#define UDNSIM_CHANNEL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "udnsim/error.hpp"
#include "udnsim/geometry.hpp"
#include "udnsim/rng.hpp"

namespace udnsim {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

// --- LOS probability and K factor -------------------------------------------

/// Urban-micro LOS probability: min(18/d, 1) * (1 - exp(-d/36)) + exp(-d/36).
/// Equals 1 for d <= 18 m.
inline double p_los(double d_m) {
  const double e = std::exp(-d_m / 36.0);
  const double near = d_m <= 18.0 ? 1.0 : 18.0 / d_m;
  return near * (1.0 - e) + e;
}

inline constexpr double kLosZoneM = 18.0;
inline constexpr double kLosZoneK = 32.0;

/// Rician K factor (linear) as a function of 2-D UE-BS distance.
///
/// Inside the 18 m LOS zone K is pinned at 32 (about 15 dB); beyond it the
/// exponential fit 140.10 * exp(-0.107 d) of P_LOS / (1 - P_LOS) is used.
/// The two branches do not meet at 18 m (32 vs about 20.4); the jump is kept.
inline double rician_k(double d_m) {
  if (d_m < kLosZoneM) return kLosZoneK;
  return 140.10 * std::exp(-0.107 * d_m);
}

// --- fast fading --------------------------------------------------------------

/// Amplitudes of the specular and diffuse parts of a unit-power Rician channel.
struct RicianFading {
  double los_amplitude = 0.0;      // sqrt(K / (K + 1))
  double diffuse_amplitude = 1.0;  // sqrt(1 / (K + 1))

  static RicianFading from_k(double k) {
    if (!(k >= 0.0)) throw ConfigError("rician_k", "must be non-negative");
    if (std::isinf(k)) return {1.0, 0.0};
    return {std::sqrt(k / (k + 1.0)), std::sqrt(1.0 / (k + 1.0))};
  }
};

/// Draws |X|^2 for X = a e^{j theta} + b Z, Z complex standard normal with
/// unit total variance and theta uniform on [0, 2 pi). Because Z is circularly
/// symmetric, |X|^2 has the same law as |a + b Z|^2, so the phase is not drawn.
/// The mean power gain is a^2 + b^2 = 1 for every K.
///
/// Holds its normal distribution so repeated draws reuse the cached pair.
class FadingSampler {
 public:
  template <class URBG>
  double operator()(const RicianFading& f, URBG& rng) {
    const double re = f.los_amplitude + f.diffuse_amplitude * normal_(rng);
    const double im = f.diffuse_amplitude * normal_(rng);
    return re * re + im * im;
  }

 private:
  NormalDistribution normal_{0.0, std::numbers::sqrt2 / 2.0};
};

template <class URBG>
double sample_fading_power(double k, URBG& rng) {
  FadingSampler sampler;
  return sampler(RicianFading::from_k(k), rng);
}

/// Rician amplitude PDF with total power gamma and factor K.
inline double rician_amplitude_pdf(double x, double k, double gamma = 1.0) {
  if (x < 0.0) return 0.0;
  const double bessel_arg = 2.0 * std::sqrt(k * (k + 1.0) / gamma) * x;
  return 2.0 * (k + 1.0) * x / gamma *
         std::exp(-k - (k + 1.0) * x * x / gamma) * std::cyl_bessel_i(0.0, bessel_arg);
}

// --- shadowing ----------------------------------------------------------------

/// Cross-correlation of shadowing between sites: min(sqrt(0.5^2 + exp(-isd/d_cor)^2), 1).
/// Decreases towards 0.5 as the ISD grows.
inline double shadow_cross_correlation(double isd_m, double d_cor_m) {
  if (!(d_cor_m > 0.0)) throw ConfigError("d_cor_m", "must be positive");
  const double e = std::exp(-isd_m / d_cor_m);
  return std::min(std::sqrt(0.25 + e * e), 1.0);
}

/// Shadowing seen by one UE towards every BS.
struct ShadowField {
  std::vector<double> values_db;
  double sigma_db = 0.0;
  double rho = 0.0;
};

/// Equicorrelated Gaussian shadowing: s_j = sigma (sqrt(rho) Z0 + sqrt(1-rho) Zj).
template <class URBG>
ShadowField sample_shadowing(std::size_t n_bs, double rho, double sigma_db, URBG& rng) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw ConfigError("rho", "must lie in [0, 1]");
  if (!(sigma_db >= 0.0)) throw ConfigError("shadow_sigma_db", "must be non-negative");

  NormalDistribution normal(0.0, 1.0);
  const double common_weight = std::sqrt(rho);
  const double own_weight = std::sqrt(1.0 - rho);
  const double common = normal(rng);

  ShadowField field;
  field.sigma_db = sigma_db;
  field.rho = rho;
  field.values_db.reserve(n_bs);
  for (std::size_t j = 0; j < n_bs; ++j)
    field.values_db.push_back(sigma_db * (common_weight * common + own_weight * normal(rng)));
  return field;
}

// --- path loss ----------------------------------------------------------------

/// PL = slope * log10(d) + offset + freq_coef * log10(fc_ghz), per LOS state.
/// Defaults are the urban-micro hexagonal-layout formulas from 3GPP TR 36.814.
struct PathLossModel {
  double los_slope = 22.0;
  double los_offset = 28.0;
  double los_freq_coef = 20.0;
  double nlos_slope = 36.7;
  double nlos_offset = 22.7;
  double nlos_freq_coef = 26.0;

  double operator()(double d_m, bool is_los, double fc_ghz) const {
    if (!(d_m >= kMinUeDistanceM))
      throw ConfigError("distance", "path loss is undefined below 1 m");
    if (is_los) return los_slope * std::log10(d_m) + los_offset + los_freq_coef * std::log10(fc_ghz);
    return nlos_slope * std::log10(d_m) + nlos_offset + nlos_freq_coef * std::log10(fc_ghz);
  }

  friend bool operator==(const PathLossModel&, const PathLossModel&) = default;
};

inline double path_loss_db(double d_m, bool is_los, double fc_ghz) {
  return PathLossModel{}(d_m, is_los, fc_ghz);
}

// --- antenna ------------------------------------------------------------------

/// Vertical pattern G(theta) = G_max - min(12 ((theta - tilt) / theta_3dB)^2, SLA_v),
/// omnidirectional in azimuth. Angles in degrees, theta measured downwards.
struct AntennaPattern {
  double max_gain_dbi = 5.0;
  double side_lobe_db = 20.0;
  double tilt_deg = 0.0;
  double beamwidth_3db_deg = 10.0;

  /// Tilt towards the cell-edge ground point and a beamwidth chosen so the
  /// -3 dB ray hits a UE at the cell edge (circumradius, height h_ue).
  static AntennaPattern calibrated(double cell_radius_m, double bs_height_m,
                                   double ue_height_m, double max_gain_dbi = 5.0,
                                   double side_lobe_db = 20.0) {
    const double to_deg = 180.0 / std::numbers::pi;
    AntennaPattern p;
    p.max_gain_dbi = max_gain_dbi;
    p.side_lobe_db = side_lobe_db;
    p.tilt_deg = std::atan2(bs_height_m, cell_radius_m) * to_deg;
    const double edge_ray_deg = std::atan2(bs_height_m - ue_height_m, cell_radius_m) * to_deg;
    p.beamwidth_3db_deg = 2.0 * (p.tilt_deg - edge_ray_deg);
    return p;
  }

  /// Fixed beamwidth with the upper -3 dB ray at `alpha_deg` below the
  /// horizon, so the ray leaves the BS and reaches UE height at the cell edge
  /// when the BS height follows bs_antenna_height().
  static AntennaPattern upper_ray(double alpha_deg, double beamwidth_3db_deg,
                                  double max_gain_dbi = 5.0, double side_lobe_db = 20.0) {
    AntennaPattern p;
    p.max_gain_dbi = max_gain_dbi;
    p.side_lobe_db = side_lobe_db;
    p.beamwidth_3db_deg = beamwidth_3db_deg;
    p.tilt_deg = alpha_deg + beamwidth_3db_deg / 2.0;
    return p;
  }
};

inline double depression_angle_deg(double bs_height_m, double ue_height_m,
                                   double horizontal_distance_m) {
  return std::atan2(bs_height_m - ue_height_m, horizontal_distance_m) * 180.0 / std::numbers::pi;
}

inline double antenna_gain_db(double bs_height_m, double ue_height_m,
                              double horizontal_distance_m, const AntennaPattern& pattern) {
  const double theta = depression_angle_deg(bs_height_m, ue_height_m, horizontal_distance_m);
  const double off = (theta - pattern.tilt_deg) / pattern.beamwidth_3db_deg;
  return pattern.max_gain_dbi - std::min(12.0 * off * off, pattern.side_lobe_db);
}

// --- per-link state -----------------------------------------------------------

struct LinkState {
  double distance_2d_m = 0.0;
  double distance_3d_m = 0.0;
  bool is_los = true;
  double path_loss_db = 0.0;
  double shadowing_db = 0.0;
  double antenna_gain_db = 0.0;
  double rician_k = 0.0;

  /// Antenna, path-loss and shadowing gain, excluding fast fading.
  double large_scale_gain_db() const { return antenna_gain_db - path_loss_db + shadowing_db; }
};

/// How the LOS state enters the path loss.
///
/// bernoulli: one LOS/NLOS draw per link and drop; the path loss of the drawn
/// state applies. weighted: the path loss is the P_LOS-weighted mix (in dB)
/// of the LOS and NLOS formulas, the usual 3GPP hexagonal-layout reading of
/// a "LOS and NLOS" model. The drawn state is still recorded in LinkState.
enum class LosModel { bernoulli, weighted };

inline std::string_view to_string(LosModel m) {
  return m == LosModel::bernoulli ? "bernoulli" : "weighted";
}

inline LosModel parse_los_model(std::string_view s) {
  if (s == "bernoulli") return LosModel::bernoulli;
  if (s == "weighted") return LosModel::weighted;
  throw ConfigError("los_model", "expected bernoulli|weighted, got '" + std::string(s) + "'");
}

/// Everything that turns geometry into a LinkState.
struct ChannelModel {
  double carrier_ghz = 2.0;
  PathLossModel path_loss;
  AntennaPattern antenna;
  bool rayleigh = false;  // forces K = 0 on every link
  LosModel los_model = LosModel::bernoulli;

  LinkState link(const Point2& bs, double bs_height_m, const Point2& ue,
                 double ue_height_m, bool is_los, double shadowing_db) const {
    LinkState s;
    s.distance_2d_m = distance(bs, ue);
    const double dh = bs_height_m - ue_height_m;
    s.distance_3d_m = std::sqrt(s.distance_2d_m * s.distance_2d_m + dh * dh);
    s.is_los = is_los;
    const double d3 = std::max(s.distance_3d_m, kMinUeDistanceM);
    if (los_model == LosModel::weighted) {
      const double p = p_los(s.distance_2d_m);
      s.path_loss_db = p * path_loss(d3, true, carrier_ghz) + (1.0 - p) * path_loss(d3, false, carrier_ghz);
    } else {
      s.path_loss_db = path_loss(d3, is_los, carrier_ghz);
    }
    s.shadowing_db = shadowing_db;
    s.antenna_gain_db = antenna_gain_db(bs_height_m, ue_height_m, s.distance_2d_m, antenna);
    s.rician_k = rayleigh ? 0.0 : rician_k(s.distance_2d_m);
    return s;
  }
};

}  // namespace udnsim

#endif  // UDNSIM_CHANNEL_HPP
