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

// ptnc: run experiments to CSV and execute the validation suite.
//
// Exit status: 0 success, 1 validation failure (including a state that fails
// its density-matrix checks mid-run), 2 configuration or usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ptnc/config.hpp"
#include "ptnc/errors.hpp"
#include "ptnc/experiment.hpp"
#include "ptnc/validation.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kConfigError = 2;

#ifndef PTNC_DEFAULT_CONFIG_DIR
#define PTNC_DEFAULT_CONFIG_DIR "configs"
#endif

struct ConfigDir {
  fs::path path;
  bool from_env = false;
};

ConfigDir config_dir() {
  if (const char* env = std::getenv("PTNC_CONFIG_DIR"); env && *env) return {env, true};
  return {PTNC_DEFAULT_CONFIG_DIR, false};
}

ptnc::ExperimentConfig resolve_config(ptnc::ExperimentId id, const std::string& explicit_path) {
  if (!explicit_path.empty()) return ptnc::load_config(explicit_path, id);
  const ConfigDir dir = config_dir();
  const fs::path file = dir.path / (std::string(ptnc::to_string(id)) + ".cfg");
  if (fs::exists(file)) return ptnc::load_config(file, id);
  if (dir.from_env) {
    throw ptnc::ConfigError("no '" + file.filename().string() + "' in PTNC_CONFIG_DIR (" + dir.path.string() + ")");
  }
  std::cerr << "ptnc: " << file << " not found, using built-in defaults\n";
  return ptnc::default_config(id);
}

int run_command(const std::string& name, const std::string& config_path, const std::string& out_path) {
  const auto id = ptnc::parse_experiment_id(name);
  if (!id) throw ptnc::ConfigError("unknown experiment '" + name + "' (see --list)");
  const ptnc::ExperimentConfig cfg = resolve_config(*id, config_path);
  const ptnc::CsvTable table = ptnc::run_experiment(cfg);

  if (out_path.empty() || out_path == "-") {
    ptnc::write_csv(table, std::cout);
    return std::cout ? kOk : kConfigError;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ptnc::ConfigError("cannot open output file '" + out_path + "'");
  ptnc::write_csv(table, out);
  out.close();
  if (!out) throw ptnc::ConfigError("failed writing '" + out_path + "'");
  return kOk;
}

int validate_command(std::uint64_t seed, double bs_fault) {
  ptnc::ValidationOptions opts;
  opts.seed = seed;
  opts.bs_fault = bs_fault;

  const ConfigDir dir = config_dir();
  if (fs::is_directory(dir.path)) {
    ptnc::use_configs(opts, ptnc::load_config_directory(dir.path));
  } else if (dir.from_env) {
    throw ptnc::ConfigError("PTNC_CONFIG_DIR (" + dir.path.string() + ") is not a directory");
  }

  const ptnc::ValidationReport report = ptnc::run_validation(opts);
  report.print(std::cout);
  return report.all_passed() ? kOk : kValidationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PT-symmetric qubit nonclassicality experiments"};
  app.require_subcommand(0, 1);

  bool list = false;
  app.add_flag("--list", list, "List the available experiments");

  std::string experiment;
  std::string config_path;
  std::string out_path;
  auto* run = app.add_subcommand("run", "Run an experiment and write CSV");
  run->add_option("experiment", experiment, "Experiment name")->required();
  run->add_option("--config", config_path, "Config file (default: $PTNC_CONFIG_DIR/<experiment>.cfg)");
  run->add_option("--out", out_path, "Output CSV path (default: stdout)");

  std::uint64_t seed = ptnc::ValidationOptions{}.seed;
  double bs_fault = 0.0;
  auto* validate = app.add_subcommand("validate", "Run the validation suite");
  validate->add_option("--seed", seed, "Seed for the randomized checks");
  validate->add_option("--inject-bs-fault", bs_fault, "Perturb the beam-splitter unitary by this amount");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (list) {
      for (auto id : ptnc::all_experiments()) std::cout << ptnc::to_string(id) << '\n';
      return kOk;
    }
    if (*run) return run_command(experiment, config_path, out_path);
    if (*validate) return validate_command(seed, bs_fault);
    std::cerr << app.help();
    return kConfigError;
  } catch (const ptnc::ConfigError& e) {
    std::cerr << "ptnc: config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ptnc::Error& e) {
    std::cerr << "ptnc: " << e.what() << '\n';
    return kValidationFailure;
  }
}
