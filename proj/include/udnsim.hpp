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

#ifndef UDNSIM_HPP
#define UDNSIM_HPP

#include "udnsim/channel.hpp"
#include "udnsim/config.hpp"
#include "udnsim/engine.hpp"
#include "udnsim/error.hpp"
#include "udnsim/geometry.hpp"
#include "udnsim/link.hpp"
#include "udnsim/presets.hpp"
#include "udnsim/report.hpp"
#include "udnsim/result.hpp"
#include "udnsim/rng.hpp"
#include "udnsim/scheduler.hpp"
#include "udnsim/stats.hpp"

#endif  // UDNSIM_HPP
