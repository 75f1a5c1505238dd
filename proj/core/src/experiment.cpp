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

#include "ptnc/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "ptnc/beamsplitter.hpp"
#include "ptnc/channels.hpp"
#include "ptnc/errors.hpp"
#include "ptnc/measures.hpp"

namespace ptnc {
namespace {

struct Wanted {
  bool q = false;
  bool c = false;
  bool n = false;
};

Wanted wanted_measures(ExperimentId id) {
  switch (id) {
    case ExperimentId::MeasuresVsTime:
      return {true, true, true};
    case ExperimentId::ChannelConcurrenceP1:
    case ExperimentId::ConcurrenceUnderNoise:
      return {false, true, false};
    case ExperimentId::MidUnderNoise:
      return {true, false, false};
    case ExperimentId::NegativityUnderNoise:
      return {false, false, true};
    case ExperimentId::EigenSurface:
      break;
  }
  return {};
}

ResultRow measure_row(double t, std::string label, const TwoModeState& state, Wanted w) {
  ResultRow row{t, std::move(label), {}, {}, {}};
  if (w.q) row.q = mid(state);
  if (w.c) row.c = concurrence(state);
  if (w.n) row.n = negativity(state);
  return row;
}

TwoModeState pt_output(const PTParams& p, double t) {
  return bs_output(QubitState::from_matrix(rho_t(p, t)));
}

void require_experiment(const ExperimentConfig& cfg, std::initializer_list<ExperimentId> ids) {
  for (ExperimentId id : ids) {
    if (cfg.experiment == id) return;
  }
  throw ConfigError("configuration is for a different experiment: " + std::string(to_string(cfg.experiment)));
}

}  // namespace

std::vector<EigenSurfaceRow> run_eigen_surface(const ExperimentConfig& cfg) {
  require_experiment(cfg, {ExperimentId::EigenSurface});
  cfg.validate();
  std::vector<EigenSurfaceRow> rows;
  const auto second = cfg.gamma_axis ? cfg.gamma_axis->points() : cfg.phi_axis->points();
  for (double omega : cfg.omega_axis.points()) {
    for (double v : second) {
      PTParams p{omega, cfg.gamma_axis ? cfg.phi : v, cfg.gamma_axis ? v : cfg.gamma};
      rows.push_back({p.omega_eff, p.phi, p.gamma, eigenvalues(p), p.phase()});
    }
  }
  return rows;
}

std::vector<ResultRow> run_measures_vs_time(const ExperimentConfig& cfg) {
  require_experiment(cfg, {ExperimentId::MeasuresVsTime});
  cfg.validate();
  const Wanted w = wanted_measures(cfg.experiment);
  std::vector<ResultRow> rows;
  for (const auto& set : cfg.pt_sets) {
    for (double t : cfg.time.points()) rows.push_back(measure_row(t, set.name, pt_output(set.params, t), w));
  }
  return rows;
}

std::vector<ResultRow> run_channel_experiments(const ExperimentConfig& cfg) {
  require_experiment(cfg, {ExperimentId::ChannelConcurrenceP1, ExperimentId::MidUnderNoise,
                           ExperimentId::ConcurrenceUnderNoise, ExperimentId::NegativityUnderNoise});
  cfg.validate();
  const Wanted w = wanted_measures(cfg.experiment);
  const auto times = cfg.time.points();
  std::vector<ResultRow> rows;

  if (cfg.experiment == ExperimentId::ChannelConcurrenceP1) {
    const TwoModeState input = bs_output(QubitState{1.0, 0.0});
    for (const auto& ch : cfg.channels) {
      for (double t : times) {
        rows.push_back(measure_row(t, ch.name, apply_two_arm(ch.arm_a, ch.arm_b, t, t, input), w));
      }
    }
    return rows;
  }

  for (const auto& set : cfg.pt_sets) {
    for (const auto& ch : cfg.channels) {
      const std::string label = set.name + "/" + ch.name;
      for (double t : times) {
        const TwoModeState noisy = apply_two_arm(ch.arm_a, ch.arm_b, t, t, pt_output(set.params, t));
        rows.push_back(measure_row(t, label, noisy, w));
      }
    }
  }
  return rows;
}

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvTable run_experiment(const ExperimentConfig& cfg) {
  CsvTable table;
  if (cfg.experiment == ExperimentId::EigenSurface) {
    table.header = {"omega", "phi", "gamma", "re_e_plus", "im_e_plus", "re_e_minus", "im_e_minus", "label"};
    for (const auto& r : run_eigen_surface(cfg)) {
      table.rows.push_back({format_number(r.omega), format_number(r.phi), format_number(r.gamma),
                            format_number(r.energies.plus.real()), format_number(r.energies.plus.imag()),
                            format_number(r.energies.minus.real()), format_number(r.energies.minus.imag()),
                            std::string(to_string(r.label))});
    }
    return table;
  }

  const auto rows = cfg.experiment == ExperimentId::MeasuresVsTime ? run_measures_vs_time(cfg)
                                                                    : run_channel_experiments(cfg);
  const Wanted w = wanted_measures(cfg.experiment);
  table.header = {"t", "label"};
  if (w.q) table.header.emplace_back("Q");
  if (w.c) table.header.emplace_back("C");
  if (w.n) table.header.emplace_back("N");
  for (const auto& r : rows) {
    std::vector<std::string> cells{format_number(r.t), r.label};
    for (const auto& v : {r.q, r.c, r.n}) {
      if (!v) continue;
      if (!std::isfinite(*v)) throw DomainError("non-finite measure at t = " + format_number(r.t));
      cells.push_back(format_number(*v));
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

void write_csv(const CsvTable& table, std::ostream& out) {
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << cells[k];
    out << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

}  // namespace ptnc
