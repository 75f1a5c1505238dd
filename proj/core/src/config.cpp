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

#include "ptnc/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "ptnc/errors.hpp"

namespace ptnc {
namespace {

constexpr double kPdSlack = 1e-12;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(std::string_view s, char sep) {
  std::vector<std::string> out;
  while (true) {
    const auto pos = s.find(sep);
    const auto item = trim(s.substr(0, pos));
    if (!item.empty()) out.emplace_back(item);
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

double parse_double(std::string_view text, std::string_view key) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ConfigError("key '" + std::string(key) + "': '" + std::string(text) + "' is not a finite number");
  }
  return v;
}

std::size_t parse_count(std::string_view text, std::string_view key) {
  std::size_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("key '" + std::string(key) + "': '" + std::string(text) + "' is not a count");
  }
  return v;
}

// Key/value store that remembers which keys were read so leftovers can be
// reported as unknown.
class KeyValues {
 public:
  explicit KeyValues(std::string_view text) {
    std::size_t line_no = 0;
    while (!text.empty()) {
      ++line_no;
      const auto nl = text.find('\n');
      std::string_view line = text.substr(0, nl);
      text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
      }
      const std::string key(trim(line.substr(0, eq)));
      const std::string value(trim(line.substr(eq + 1)));
      if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
      if (!values_.emplace(key, value).second) {
        throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
      }
    }
  }

  std::optional<std::string> get(const std::string& key) {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    used_.insert(key);
    return it->second;
  }

  std::string require(const std::string& key) {
    auto v = get(key);
    if (!v) throw ConfigError("missing key '" + key + "'");
    return *v;
  }

  std::optional<double> number(const std::string& key) {
    const auto v = get(key);
    if (!v) return std::nullopt;
    return parse_double(*v, key);
  }

  double number_or(const std::string& key, double fallback) { return number(key).value_or(fallback); }

  std::optional<GridRange> range(const std::string& key) {
    const auto v = get(key);
    if (!v) return std::nullopt;
    const auto parts = split_list(*v, ':');
    if (parts.size() != 3) throw ConfigError("key '" + key + "': expected start:stop:steps");
    return GridRange{parse_double(parts[0], key), parse_double(parts[1], key), parse_count(parts[2], key)};
  }

  void reject_unused() const {
    for (const auto& [key, value] : values_) {
      if (!used_.contains(key)) throw ConfigError("unknown key '" + key + "'");
    }
  }

 private:
  std::map<std::string, std::string> values_;
  std::set<std::string> used_;
};

// Reads the rate keys under `prefix`. Keys missing from the file fall back to
// `base` when one is given and are an error otherwise.
ChannelSpec read_arm(KeyValues& kv, const std::string& prefix, ChannelKind kind, const ChannelSpec* base) {
  ChannelSpec spec = base ? *base : ChannelSpec{};
  spec.kind = kind;
  auto field = [&](const char* key, double& slot) {
    if (const auto v = kv.number(prefix + key)) {
      slot = *v;
    } else if (!base) {
      throw ConfigError("missing key '" + prefix + key + "'");
    }
  };
  switch (kind) {
    case ChannelKind::None:
      break;
    case ChannelKind::RTN:
      field("a", spec.coupling);
      field("switching_rate", spec.switching_rate);
      break;
    case ChannelKind::PD:
      field("eta", spec.eta);
      break;
    case ChannelKind::AD:
      field("chi", spec.chi);
      break;
  }
  try {
    spec.validate();
  } catch (const DomainError& e) {
    throw ConfigError("channel '" + prefix + "': " + e.what());
  }
  return spec;
}

ChannelKind require_kind(const std::string& text, const std::string& key) {
  const auto kind = parse_channel_kind(text);
  if (!kind) throw ConfigError("key '" + key + "': unknown channel kind '" + text + "'");
  return *kind;
}

NamedChannel named(std::string name, ChannelSpec spec) { return {std::move(name), spec, spec}; }

}  // namespace

std::string_view to_string(ExperimentId id) noexcept {
  switch (id) {
    case ExperimentId::EigenSurface:
      return "eigen-surface";
    case ExperimentId::MeasuresVsTime:
      return "measures-vs-time";
    case ExperimentId::ChannelConcurrenceP1:
      return "channel-concurrence-p1";
    case ExperimentId::MidUnderNoise:
      return "mid-under-noise";
    case ExperimentId::ConcurrenceUnderNoise:
      return "concurrence-under-noise";
    case ExperimentId::NegativityUnderNoise:
      return "negativity-under-noise";
  }
  return "?";
}

std::optional<ExperimentId> parse_experiment_id(std::string_view text) noexcept {
  for (ExperimentId id : all_experiments()) {
    if (to_string(id) == text) return id;
  }
  return std::nullopt;
}

const std::vector<ExperimentId>& all_experiments() {
  static const std::vector<ExperimentId> ids{
      ExperimentId::EigenSurface,          ExperimentId::MeasuresVsTime,
      ExperimentId::ChannelConcurrenceP1,  ExperimentId::MidUnderNoise,
      ExperimentId::ConcurrenceUnderNoise, ExperimentId::NegativityUnderNoise,
  };
  return ids;
}

void GridRange::validate(std::string_view what) const {
  if (!std::isfinite(start) || !std::isfinite(stop) || !(stop > start)) {
    throw ConfigError(std::string(what) + ": range must be finite with stop > start");
  }
  if (steps < 2) throw ConfigError(std::string(what) + ": at least 2 steps are required");
}

std::vector<double> GridRange::points() const {
  std::vector<double> out(steps);
  const double h = (stop - start) / static_cast<double>(steps - 1);
  for (std::size_t k = 0; k < steps; ++k) out[k] = start + h * static_cast<double>(k);
  out.back() = stop;
  return out;
}

void ExperimentConfig::validate() const {
  if (experiment == ExperimentId::EigenSurface) {
    omega_axis.validate("grid.omega");
    if (gamma_axis.has_value() == phi_axis.has_value()) {
      throw ConfigError("eigen-surface needs exactly one of grid.gamma or grid.phi");
    }
    if (gamma_axis) {
      gamma_axis->validate("grid.gamma");
      if (gamma_axis->start < 0) throw ConfigError("grid.gamma must be non-negative");
    }
    if (phi_axis) phi_axis->validate("grid.phi");
    if (!std::isfinite(phi) || !std::isfinite(gamma) || gamma < 0) {
      throw ConfigError("eigen-surface: phi must be finite and gamma finite and non-negative");
    }
    return;
  }

  time.validate("time");
  if (time.start < 0) throw ConfigError("time grid must start at t >= 0");

  const bool needs_pt = experiment != ExperimentId::ChannelConcurrenceP1;
  const bool needs_channels = experiment != ExperimentId::MeasuresVsTime;
  if (needs_pt && pt_sets.empty()) throw ConfigError("pt_sets must name at least one parameter set");
  if (needs_channels && channels.empty()) throw ConfigError("channels must name at least one channel");

  for (const auto& set : pt_sets) {
    if (!std::isfinite(set.params.omega_eff) || !std::isfinite(set.params.phi) ||
        !std::isfinite(set.params.gamma) || set.params.gamma < 0) {
      throw ConfigError("parameter set '" + set.name + "' has invalid values");
    }
    if (const auto label = parse_phase_label(set.name); label && *label != set.params.phase()) {
      throw ConfigError("parameter set '" + set.name + "' classifies as " +
                        std::string(to_string(set.params.phase())));
    }
  }
  for (const auto& ch : channels) {
    for (const ChannelSpec* arm : {&ch.arm_a, &ch.arm_b}) {
      try {
        arm->validate();
      } catch (const DomainError& e) {
        throw ConfigError("channel '" + ch.name + "': " + e.what());
      }
      if (arm->kind == ChannelKind::PD && arm->eta * time.stop > std::numbers::pi / 2.0 + kPdSlack) {
        throw ConfigError("channel '" + ch.name + "': phase damping requires eta * t <= pi/2 on the time grid");
      }
    }
  }
}

ExperimentConfig parse_config(std::string_view text, std::optional<ExperimentId> expected) {
  KeyValues kv(text);
  ExperimentConfig cfg;

  if (const auto name = kv.get("experiment")) {
    const auto id = parse_experiment_id(*name);
    if (!id) throw ConfigError("unknown experiment '" + *name + "'");
    if (expected && *expected != *id) {
      throw ConfigError("config is for experiment '" + *name + "', not '" +
                        std::string(to_string(*expected)) + "'");
    }
    cfg.experiment = *id;
  } else if (expected) {
    cfg.experiment = *expected;
  } else {
    throw ConfigError("missing key 'experiment'");
  }

  if (cfg.experiment == ExperimentId::EigenSurface) {
    if (auto r = kv.range("grid.omega")) cfg.omega_axis = *r;
    cfg.gamma_axis = kv.range("grid.gamma");
    cfg.phi_axis = kv.range("grid.phi");
    cfg.phi = kv.number_or("phi", 0.0);
    cfg.gamma = kv.number_or("gamma", 0.0);
  } else {
    cfg.time.start = kv.number_or("time.start", cfg.time.start);
    cfg.time.stop = kv.number_or("time.stop", cfg.time.stop);
    if (const auto steps = kv.get("time.steps")) cfg.time.steps = parse_count(*steps, "time.steps");

    if (const auto sets = kv.get("pt_sets")) {
      for (const auto& name : split_list(*sets, ',')) {
        PTParams p;
        p.omega_eff = parse_double(kv.require(name + ".omega"), name + ".omega");
        p.phi = parse_double(kv.require(name + ".phi"), name + ".phi");
        p.gamma = parse_double(kv.require(name + ".gamma"), name + ".gamma");
        cfg.pt_sets.push_back({name, p});
      }
    }
    if (const auto names = kv.get("channels")) {
      for (const auto& name : split_list(*names, ',')) {
        const ChannelKind kind = require_kind(kv.require(name + ".kind"), name + ".kind");
        NamedChannel ch{name, read_arm(kv, name + ".", kind, nullptr), {}};
        ChannelKind kind_b = kind;
        if (const auto kb = kv.get(name + ".arm_b.kind")) kind_b = require_kind(*kb, name + ".arm_b.kind");
        ch.arm_b = read_arm(kv, name + ".arm_b.", kind_b, kind_b == kind ? &ch.arm_a : nullptr);
        cfg.channels.push_back(std::move(ch));
      }
    }
  }

  kv.reject_unused();
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path, std::optional<ExperimentId> expected) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), expected);
}

std::vector<LoadedConfig> load_config_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw ConfigError("config directory '" + dir.string() + "' does not exist");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".cfg") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<LoadedConfig> out;
  for (const auto& f : files) {
    try {
      out.push_back({f, load_config(f)});
    } catch (const ConfigError& e) {
      throw ConfigError(f.filename().string() + ": " + e.what());
    }
  }
  return out;
}

NamedPTParams default_pts_set() { return {"PTS", PTParams{2.0, std::numbers::pi, 0.5}}; }

NamedPTParams default_ptsb_set() { return {"PTSB", PTParams{0.7, 0.0, 1.0}}; }

ExperimentConfig default_config(ExperimentId id) {
  ExperimentConfig cfg;
  cfg.experiment = id;
  switch (id) {
    case ExperimentId::EigenSurface:
      cfg.omega_axis = {0.0, 3.0, 61};
      cfg.gamma_axis = GridRange{0.0, 2.0, 41};
      cfg.phi = 0.0;
      break;
    case ExperimentId::MeasuresVsTime:
      cfg.pt_sets = {default_pts_set(), default_ptsb_set()};
      break;
    case ExperimentId::ChannelConcurrenceP1:
      cfg.channels = {named("nonmarkovian", ChannelSpec::rtn(1.0, 0.2)),
                      named("markovian", ChannelSpec::rtn(0.1, 1.0))};
      break;
    case ExperimentId::MidUnderNoise:
    case ExperimentId::ConcurrenceUnderNoise:
    case ExperimentId::NegativityUnderNoise:
      cfg.pt_sets = {default_pts_set(), default_ptsb_set()};
      cfg.channels = {named("noiseless", ChannelSpec::none()),
                      named("nonmarkovian", ChannelSpec::rtn(1.0, 0.2)),
                      named("markovian", ChannelSpec::rtn(0.1, 1.0))};
      break;
  }
  return cfg;
}

}  // namespace ptnc
