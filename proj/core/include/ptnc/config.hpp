// Copyright 2026 The ptnc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Experiment configuration: a flat `key = value` text format.
//
//   # comment
//   experiment = measures-vs-time
//   time.start = 0
//   time.stop  = 10
//   time.steps = 501
//   pt_sets    = PTS, PTSB
//   PTS.omega  = 2
//   PTS.phi    = 3.141592653589793
//   PTS.gamma  = 0.5
//   channels   = nonmarkovian
//   nonmarkovian.kind = rtn
//   nonmarkovian.a = 1
//   nonmarkovian.switching_rate = 0.2
//   nonmarkovian.arm_b.a = 0.8        # optional per-arm override
//
// Eigenvalue surfaces take `grid.omega = start:stop:steps` and exactly one of
// `grid.gamma` or `grid.phi`, with the remaining parameter given as a scalar.
// Unknown keys are rejected.

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptnc/channels.hpp"
#include "ptnc/ptqubit.hpp"

namespace ptnc {

enum class ExperimentId {
  EigenSurface,
  MeasuresVsTime,
  ChannelConcurrenceP1,
  MidUnderNoise,
  ConcurrenceUnderNoise,
  NegativityUnderNoise,
};

std::string_view to_string(ExperimentId id) noexcept;
std::optional<ExperimentId> parse_experiment_id(std::string_view text) noexcept;
const std::vector<ExperimentId>& all_experiments();

/// Inclusive, evenly spaced range with `steps` points.
struct GridRange {
  double start = 0.0;
  double stop = 10.0;
  std::size_t steps = 501;

  /// Throws ConfigError unless the range is finite, strictly increasing and
  /// steps >= 2.
  void validate(std::string_view what) const;
  std::vector<double> points() const;
};

struct NamedPTParams {
  std::string name;
  PTParams params;
};

struct NamedChannel {
  std::string name;
  ChannelSpec arm_a;
  ChannelSpec arm_b;
};

struct ExperimentConfig {
  ExperimentId experiment = ExperimentId::MeasuresVsTime;
  GridRange time;
  std::vector<NamedPTParams> pt_sets;
  std::vector<NamedChannel> channels;

  // eigen-surface only
  GridRange omega_axis{0.0, 3.0, 61};
  std::optional<GridRange> gamma_axis;
  std::optional<GridRange> phi_axis;
  double phi = 0.0;
  double gamma = 0.0;

  /// Throws ConfigError when the configuration cannot be run: missing
  /// parameter sets or channels for the experiment, invalid grids, negative
  /// rates, phase damping beyond eta t = pi/2 on the time grid, or a set
  /// named PTS/PTSB/EXCEPTIONAL whose parameters classify differently.
  void validate() const;
};

/// Parses the text format above. When `expected` is given and the file names
/// a different experiment, ConfigError is thrown; when the file omits the
/// experiment key, `expected` is used.
ExperimentConfig parse_config(std::string_view text, std::optional<ExperimentId> expected = std::nullopt);

ExperimentConfig load_config(const std::filesystem::path& path,
                             std::optional<ExperimentId> expected = std::nullopt);

struct LoadedConfig {
  std::filesystem::path path;
  ExperimentConfig config;
};

/// Every *.cfg file in `dir`, sorted by path. Errors name the offending file.
std::vector<LoadedConfig> load_config_directory(const std::filesystem::path& dir);

/// Built-in defaults; identical to the files shipped under configs/.
ExperimentConfig default_config(ExperimentId id);

/// Default PT-symmetric (J = 3 > gamma = 0.5) and broken (J = 0.3 < gamma = 1)
/// parameter sets.
NamedPTParams default_pts_set();
NamedPTParams default_ptsb_set();

}  // namespace ptnc
