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
 * \file udnsim/geometry.hpp
 *
 * \brief Hexagonal small-cell deployment and UE placement.
 *
 * BSs sit on a hexagonal lattice with nearest-neighbour spacing equal to the
 * inter-site distance (ISD). Cells are flat-top hexagons with a vertex on the
 * +x axis, so the circumradius is ISD/sqrt(3) and the six first-tier
 * neighbours lie at 30, 90, ..., 330 degrees.
 */

#ifndef UDNSIM_GEOMETRY_HPP
#define UDNSIM_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <numbers>
#include <random>
#include <vector>

#include "udnsim/error.hpp"
#include "udnsim/rng.hpp"

namespace udnsim {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline double distance(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline double norm(const Point2& p) { return std::hypot(p.x, p.y); }

/// UEs are never placed closer than this to the serving BS.
inline constexpr double kMinUeDistanceM = 1.0;

inline constexpr double kDefaultAlphaDeg = 8.045;
inline constexpr double kDefaultUeHeightM = 1.5;

struct Layout {
  std::vector<Point2> bs_positions;
  double bs_height_m = 0.0;
  std::size_t serving_index = 0;
  double isd_m = 0.0;
  int n_tiers = 0;

  std::size_t n_bs() const { return bs_positions.size(); }
  /// Circumradius of every cell.
  double cell_radius_m() const { return isd_m / std::numbers::sqrt3; }
};

struct UeDrop {
  std::vector<Point2> positions;
  double ue_height_m = kDefaultUeHeightM;
};

/// Number of BSs in a hexagonal layout with `n_tiers` rings around the centre.
constexpr std::size_t hex_bs_count(int n_tiers) {
  const auto t = static_cast<std::size_t>(n_tiers);
  return 1 + 3 * t * (t + 1);
}

/// BS height that points the -3 dB ray of the antenna at the cell edge:
/// isd/sqrt(3) * tan(alpha) + h_ue.
inline double bs_antenna_height(double isd_m, double alpha_deg, double h_ue_m) {
  if (!(isd_m >= 0.0)) throw ConfigError("isd_m", "must be non-negative");
  if (!(alpha_deg > 0.0 && alpha_deg < 90.0))
    throw ConfigError("alpha_deg", "must lie in (0, 90)");
  const double alpha = alpha_deg * std::numbers::pi / 180.0;
  return isd_m / std::numbers::sqrt3 * std::tan(alpha) + h_ue_m;
}

/// Builds the lattice ring by ring: index 0 is the serving BS at the origin,
/// followed by tier 1 (6 BSs), tier 2 (12 BSs), ... each ring ordered by
/// polar angle in [0, 2*pi).
inline Layout build_hex_grid(double isd_m, int n_tiers, double bs_height_m) {
  if (!(isd_m > 0.0) || !std::isfinite(isd_m))
    throw ConfigError("isd_m", "must be positive");
  if (n_tiers < 0) throw ConfigError("n_tiers", "must be non-negative");

  // Axial lattice basis: a1 at 30 degrees, a2 at 90 degrees, both length isd.
  const double a1x = isd_m * std::numbers::sqrt3 / 2.0;
  const double a1y = isd_m / 2.0;
  const double a2y = isd_m;

  Layout layout;
  layout.isd_m = isd_m;
  layout.n_tiers = n_tiers;
  layout.bs_height_m = bs_height_m;
  layout.serving_index = 0;
  layout.bs_positions.reserve(hex_bs_count(n_tiers));
  layout.bs_positions.push_back({0.0, 0.0});

  for (int tier = 1; tier <= n_tiers; ++tier) {
    std::vector<Point2> ring;
    ring.reserve(static_cast<std::size_t>(6 * tier));
    for (int q = -tier; q <= tier; ++q) {
      for (int r = -tier; r <= tier; ++r) {
        const int hex_dist = (std::abs(q) + std::abs(r) + std::abs(q + r)) / 2;
        if (hex_dist != tier) continue;
        ring.push_back({q * a1x, q * a1y + r * a2y});
      }
    }
    auto angle = [](const Point2& p) {
      const double a = std::atan2(p.y, p.x);
      return a < 0.0 ? a + 2.0 * std::numbers::pi : a;
    };
    std::sort(ring.begin(), ring.end(),
              [&](const Point2& a, const Point2& b) { return angle(a) < angle(b); });
    layout.bs_positions.insert(layout.bs_positions.end(), ring.begin(), ring.end());
  }
  return layout;
}

inline Layout build_hex_grid(double isd_m, int n_tiers) {
  return build_hex_grid(isd_m, n_tiers,
                        bs_antenna_height(isd_m, kDefaultAlphaDeg, kDefaultUeHeightM));
}

/// True when `p` (relative to the cell centre) lies inside the flat-top
/// hexagon of circumradius `radius`.
inline bool inside_flat_top_hexagon(const Point2& p, double radius) {
  const double ax = std::abs(p.x);
  const double ay = std::abs(p.y);
  const double half_height = radius * std::numbers::sqrt3 / 2.0;
  return ay <= half_height && std::numbers::sqrt3 * ax + ay <= std::numbers::sqrt3 * radius;
}

/// Drops `n_ue` UEs uniformly over the serving cell by rejection sampling
/// from the hexagon's bounding box, excluding a disc of kMinUeDistanceM
/// around the serving BS.
template <class URBG>
UeDrop drop_ues(const Layout& layout, std::size_t n_ue, URBG& rng,
                double ue_height_m = kDefaultUeHeightM) {
  const double radius = layout.cell_radius_m();
  const double half_height = radius * std::numbers::sqrt3 / 2.0;
  const Point2 centre = layout.bs_positions.at(layout.serving_index);
  if (n_ue > 0 && half_height <= kMinUeDistanceM)
    throw ConfigError("isd_m", "cell too small for the UE exclusion radius");

  UniformDistribution ux(-radius, radius);
  UniformDistribution uy(-half_height, half_height);

  UeDrop drop;
  drop.ue_height_m = ue_height_m;
  drop.positions.reserve(n_ue);
  while (drop.positions.size() < n_ue) {
    const double x = ux(rng);
    const double y = uy(rng);
    const Point2 p{x, y};
    if (!inside_flat_top_hexagon(p, radius) || norm(p) < kMinUeDistanceM) continue;
    drop.positions.push_back({centre.x + x, centre.y + y});
  }
  return drop;
}

}  // namespace udnsim

#endif  // UDNSIM_GEOMETRY_HPP
