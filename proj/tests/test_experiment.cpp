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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <random>
#include <sstream>

#include "doctest.h"
#include "ptnc/errors.hpp"
#include "ptnc/experiment.hpp"

using namespace ptnc;

namespace {

const std::filesystem::path kConfigDir = PTNC_CONFIG_SOURCE_DIR;

void check_same(const ChannelSpec& a, const ChannelSpec& b) {
  CHECK(a.kind == b.kind);
  CHECK(a.coupling == b.coupling);
  CHECK(a.switching_rate == b.switching_rate);
  CHECK(a.eta == b.eta);
  CHECK(a.chi == b.chi);
}

void check_same(const GridRange& a, const GridRange& b) {
  CHECK(a.start == b.start);
  CHECK(a.stop == b.stop);
  CHECK(a.steps == b.steps);
}

void check_same(const ExperimentConfig& a, const ExperimentConfig& b) {
  CHECK(a.experiment == b.experiment);
  check_same(a.time, b.time);
  REQUIRE(a.pt_sets.size() == b.pt_sets.size());
  for (std::size_t i = 0; i < a.pt_sets.size(); ++i) {
    CHECK(a.pt_sets[i].name == b.pt_sets[i].name);
    CHECK(a.pt_sets[i].params.omega_eff == b.pt_sets[i].params.omega_eff);
    CHECK(a.pt_sets[i].params.phi == b.pt_sets[i].params.phi);
    CHECK(a.pt_sets[i].params.gamma == b.pt_sets[i].params.gamma);
  }
  REQUIRE(a.channels.size() == b.channels.size());
  for (std::size_t i = 0; i < a.channels.size(); ++i) {
    CHECK(a.channels[i].name == b.channels[i].name);
    check_same(a.channels[i].arm_a, b.channels[i].arm_a);
    check_same(a.channels[i].arm_b, b.channels[i].arm_b);
  }
  check_same(a.omega_axis, b.omega_axis);
  CHECK(a.gamma_axis.has_value() == b.gamma_axis.has_value());
  if (a.gamma_axis && b.gamma_axis) check_same(*a.gamma_axis, *b.gamma_axis);
  CHECK(a.phi_axis.has_value() == b.phi_axis.has_value());
  CHECK(a.phi == b.phi);
  CHECK(a.gamma == b.gamma);
}

std::string csv(const ExperimentConfig& cfg) {
  std::ostringstream out;
  write_csv(run_experiment(cfg), out);
  return out.str();
}

ExperimentConfig short_run(ExperimentId id) {
  ExperimentConfig cfg = default_config(id);
  cfg.time.steps = 21;
  cfg.omega_axis.steps = 7;
  if (cfg.gamma_axis) cfg.gamma_axis->steps = 5;
  return cfg;
}

}  // namespace

TEST_CASE("experiment names") {
  CHECK(all_experiments().size() == 6);
  for (ExperimentId id : all_experiments()) CHECK(parse_experiment_id(to_string(id)) == id);
  CHECK_FALSE(parse_experiment_id("fig3").has_value());
}

TEST_CASE("grid ranges") {
  const auto pts = GridRange{0.0, 10.0, 501}.points();
  CHECK(pts.size() == 501);
  CHECK(pts.front() == 0.0);
  CHECK(pts.back() == 10.0);
  CHECK(pts[250] == doctest::Approx(5.0));
  CHECK_THROWS_AS(GridRange({1.0, 0.0, 5}).validate("t"), ConfigError);
  CHECK_THROWS_AS(GridRange({0.0, 1.0, 1}).validate("t"), ConfigError);
}

TEST_CASE("parse a full configuration") {
  const ExperimentConfig cfg = parse_config(R"(
# comment line
experiment = concurrence-under-noise
time.start = 0
time.stop = 4   # trailing comment
time.steps = 11
pt_sets = PTS, mine
PTS.omega = 2
PTS.phi = 3.141592653589793
PTS.gamma = 0.5
mine.omega = 0.2
mine.phi = 1
mine.gamma = 0.1
channels = mixed
mixed.kind = rtn
mixed.a = 1
mixed.switching_rate = 0.2
mixed.arm_b.a = 0.8
)");
  CHECK(cfg.experiment == ExperimentId::ConcurrenceUnderNoise);
  CHECK(cfg.time.stop == 4.0);
  CHECK(cfg.time.steps == 11);
  REQUIRE(cfg.pt_sets.size() == 2);
  CHECK(cfg.pt_sets[1].name == "mine");
  CHECK(cfg.pt_sets[1].params.phi == 1.0);
  REQUIRE(cfg.channels.size() == 1);
  CHECK(cfg.channels[0].arm_a.coupling == 1.0);
  CHECK(cfg.channels[0].arm_b.coupling == 0.8);
  CHECK(cfg.channels[0].arm_b.switching_rate == 0.2);
}

TEST_CASE("configuration errors") {
  const std::string base = "experiment = measures-vs-time\npt_sets = PTS\nPTS.omega = 2\nPTS.phi = 3.141592653589793\nPTS.gamma = 0.5\n";
  CHECK_NOTHROW(parse_config(base));
  CHECK_THROWS_AS(parse_config(base + "bogus = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(base + "time.stop = 5\ntime.stop = 6\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(base + "time.steps = ten\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(base + "time.stop = -1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(base + "no equals sign\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(base, ExperimentId::EigenSurface), ConfigError);
  CHECK_THROWS_AS(parse_config("experiment = nope\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("time.stop = 1\n"), ConfigError);
  // a set called PTSB must actually be in the broken phase
  CHECK_THROWS_AS(parse_config("experiment = measures-vs-time\npt_sets = PTSB\nPTSB.omega = 2\nPTSB.phi = 3.141592653589793\nPTSB.gamma = 0.5\n"),
                  ConfigError);
  CHECK_THROWS_AS(parse_config("experiment = measures-vs-time\npt_sets = A\nA.omega = 1\nA.phi = 0\n"), ConfigError);

  const std::string noise = "experiment = mid-under-noise\npt_sets = PTS\nPTS.omega = 2\nPTS.phi = 3.141592653589793\nPTS.gamma = 0.5\n";
  CHECK_THROWS_AS(parse_config(noise), ConfigError);  // no channels
  CHECK_THROWS_AS(parse_config(noise + "channels = d\nd.kind = pd\nd.eta = 0.3\n"), ConfigError);  // eta t > pi/2
  CHECK_NOTHROW(parse_config(noise + "time.stop = 5\nchannels = d\nd.kind = pd\nd.eta = 0.3\n"));
  CHECK_THROWS_AS(parse_config(noise + "channels = r\nr.kind = rtn\nr.a = 1\nr.switching_rate = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(noise + "channels = r\nr.kind = dephase\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(noise + "channels = r\nr.kind = ad\nr.chi = 1\nr.eta = 2\n"), ConfigError);

  CHECK_THROWS_AS(parse_config("experiment = eigen-surface\ngrid.omega = 0:3:61\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("experiment = eigen-surface\ngrid.gamma = 0:2\n"), ConfigError);
  CHECK_THROWS_AS(load_config(kConfigDir / "missing.cfg"), ConfigError);
}

TEST_CASE("shipped configurations") {
  const auto loaded = load_config_directory(kConfigDir);
  CHECK(loaded.size() >= all_experiments().size());
  for (ExperimentId id : all_experiments()) {
    CAPTURE(to_string(id));
    const auto path = kConfigDir / (std::string(to_string(id)) + ".cfg");
    check_same(load_config(path, id), default_config(id));
  }
}

TEST_CASE("eigen-surface rows") {
  ExperimentConfig cfg = short_run(ExperimentId::EigenSurface);
  const auto rows = run_eigen_surface(cfg);
  CHECK(rows.size() == 7 * 5);
  std::mt19937_64 rng(71);
  for (const auto& row : rows) {
    if (row.gamma == 0.0) {
      CHECK(row.energies.plus.imag() == 0.0);
      CHECK(row.energies.minus.imag() == 0.0);
    }
  }
  const auto& r = rows[std::uniform_int_distribution<std::size_t>(0, rows.size() - 1)(rng)];
  const EigenPair e = eigenvalues({r.omega, r.phi, r.gamma});
  CHECK(e.plus == r.energies.plus);

  // Omega = 0 gives J = 1; the gamma axis 0:2 with 5 points hits gamma = 1
  bool found = false;
  for (const auto& row : rows) {
    if (row.omega == 0.0 && row.gamma == 1.0) {
      found = true;
      CHECK(row.label == PhaseLabel::EXCEPTIONAL);
      CHECK(std::abs(row.energies.plus) == 0.0);
    }
  }
  CHECK(found);

  cfg.gamma_axis.reset();
  cfg.phi_axis = GridRange{0.0, 3.0, 4};
  cfg.gamma = 0.5;
  CHECK(run_eigen_surface(cfg).size() == 7 * 4);
}

TEST_CASE("measures versus time") {
  const auto rows = run_measures_vs_time(short_run(ExperimentId::MeasuresVsTime));
  CHECK(rows.size() == 2 * 21);
  CHECK(rows.front().label == "PTS");
  CHECK(rows.back().label == "PTSB");
  CHECK(*rows.front().q == doctest::Approx(0.0));
  CHECK(*rows.front().c == doctest::Approx(0.0));
  CHECK(*rows.front().n == doctest::Approx(0.0));
  for (const auto& row : rows) {
    CHECK(*row.c >= 0.0);
    CHECK(*row.c <= 1.0);
    CHECK(*row.n >= 0.0);
    CHECK(*row.n <= 0.5 + 1e-12);
  }
}

TEST_CASE("channel experiments") {
  ExperimentConfig p1 = default_config(ExperimentId::ChannelConcurrenceP1);
  p1.time = {0.0, 20.0, 2001};
  const auto rows = run_channel_experiments(p1);
  CHECK(rows.size() == 2 * 2001);

  // non-Markovian: concurrence dips to zero and revives
  std::vector<double> nm;
  for (const auto& row : rows) {
    if (row.label == "nonmarkovian") nm.push_back(*row.c);
  }
  std::size_t dip = 0;
  while (dip + 1 < nm.size() && !(nm[dip] < 1e-3 && nm[dip + 1] > nm[dip])) ++dip;
  REQUIRE(dip + 1 < nm.size());
  CHECK(*std::max_element(nm.begin() + static_cast<std::ptrdiff_t>(dip), nm.end()) > 0.05);

  // PD and AD are monotone
  for (const char* name : {"channel-concurrence-p1-pd.cfg", "channel-concurrence-p1-ad.cfg"}) {
    const auto r = run_channel_experiments(load_config(kConfigDir / name));
    for (std::size_t i = 1; i < r.size(); ++i) CHECK(*r[i].c <= *r[i - 1].c + 1e-12);
  }

  ExperimentConfig noise = short_run(ExperimentId::NegativityUnderNoise);
  const auto nrows = run_channel_experiments(noise);
  CHECK(nrows.size() == 2 * 3 * 21);
  CHECK(nrows.front().label == "PTS/noiseless");
  CHECK(nrows.back().label == "PTSB/markovian");
  CHECK_FALSE(nrows.front().q.has_value());
  CHECK(nrows.front().n.has_value());
}

TEST_CASE("CSV output") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(2.0) == "2");
  std::mt19937_64 rng(72);
  for (int k = 0; k < 100; ++k) {
    const double v = std::uniform_real_distribution<double>(-10.0, 10.0)(rng);
    CHECK(std::strtod(format_number(v).c_str(), nullptr) == v);
  }

  const auto cfg = short_run(ExperimentId::MidUnderNoise);
  const std::string first = csv(cfg);
  CHECK(first == csv(cfg));
  CHECK(first.rfind("t,label,Q\n", 0) == 0);
  CHECK(csv(short_run(ExperimentId::MeasuresVsTime)).rfind("t,label,Q,C,N\n", 0) == 0);
  CHECK(csv(short_run(ExperimentId::ChannelConcurrenceP1)).rfind("t,label,C\n", 0) == 0);
  CHECK(csv(short_run(ExperimentId::NegativityUnderNoise)).rfind("t,label,N\n", 0) == 0);
  CHECK(csv(short_run(ExperimentId::EigenSurface)).rfind("omega,phi,gamma,re_e_plus,im_e_plus,re_e_minus,im_e_minus,label\n", 0) == 0);
}
