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

#ifndef UDNSIM_RNG_HPP
#define UDNSIM_RNG_HPP

#include <cstdint>
#include <random>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_real_distribution.hpp>

namespace udnsim {

/// Engine and distributions come from Boost.Random: its algorithms are fixed
/// across platforms and standard libraries, unlike std:: distributions.
using Rng = boost::random::mt19937_64;
using NormalDistribution = boost::random::normal_distribution<double>;
using UniformDistribution = boost::random::uniform_real_distribution<double>;

/// What a random substream is used for. The numeric values are part of the
/// seed derivation and must never be renumbered.
enum class StreamPurpose : std::uint32_t {
  ue_drop = 1,
  los_state = 2,
  shadowing = 3,
  fading = 4,
};

/// Derives an independent generator from (master seed, drop index, purpose,
/// sub-index). The derivation depends only on these values, so a drop
/// produces the same draws on any worker and in any execution order.
///
/// Fading uses the UE index as sub-index; every other purpose uses 0.
inline Rng make_stream(std::uint64_t master_seed, std::uint64_t drop_index,
                       StreamPurpose purpose, std::uint64_t sub_index = 0) {
  auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
  auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  std::seed_seq seq{lo(master_seed), hi(master_seed),
                    lo(drop_index),  hi(drop_index),
                    static_cast<std::uint32_t>(purpose),
                    lo(sub_index),   hi(sub_index)};
  return Rng(seq);
}

}  // namespace udnsim

#endif  // UDNSIM_RNG_HPP
