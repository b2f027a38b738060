// Copyright 2026 The eqnn authors.
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

#include <cstring>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "eqnn/harness/commands.hpp"

namespace {

using eqnn::harness::ExperimentConfig;

// --config is honored before regular flags so the command line can override
// file values.
std::string prescan_config_path(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--config") == 0 && i + 1 < argc) return argv[i + 1];
    if (std::strncmp(argv[i], "--config=", 9) == 0) return argv[i] + 9;
  }
  return {};
}

void apply_n_range(const std::string& text, ExperimentConfig& cfg) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw eqnn::ValidationError("--n-range needs 'lo:hi'");
  }
  try {
    cfg.n_min = std::stoi(text.substr(0, colon));
    cfg.n_max = std::stoi(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw eqnn::ValidationError("--n-range needs integer endpoints");
  }
}

}  // namespace

int main(int argc, char** argv) {
  ExperimentConfig cfg;
  std::string config_path = prescan_config_path(argc, argv);
  std::string n_range;

  try {
    if (!config_path.empty()) cfg = eqnn::harness::load_config(config_path);

    CLI::App app{"Permutation-invariant circuit experiments"};
    app.add_option("--config", config_path, "Config file of 'key = value' lines");
    app.add_option("--n", cfg.n, "Single qubit count");
    app.add_option("--n-range", n_range, "Inclusive qubit range 'lo:hi'");
    app.add_option("--depth-rule", cfg.depth_rule,
                   "Layer count: integer, '<c>n', '<k>te', or 'grid' (train)");
    app.add_option("--family", cfg.family, "Input state family");
    app.add_option("--gen", cfg.gen, "Generator: sum_x, sum_y, sum_zz");
    app.add_option("--obs", cfg.obs, "Measurement: sum_x, sum_xx, prod_x");
    app.add_option("--samples", cfg.samples, "Gradient sample budget");
    app.add_option("--states", cfg.states, "Input draws per size");
    app.add_option("--params", cfg.params, "Angle draws per input");
    app.add_option("--draws", cfg.draws, "State draws per size (classifier)");
    app.add_option("--seed", cfg.seed, "Base seed; every draw is keyed off it");
    app.add_option("--out", cfg.out, "Output path (default stdout)");
    app.add_option("--p", cfg.p, "Edge probability for random graphs");
    app.add_option("--phi", cfg.phi, "Edge phase for graph states");
    app.add_option("--restarts", cfg.restarts, "Optimizer restarts");
    app.add_option("--trials", cfg.trials, "Resampling trials");
    app.add_option("--train-size", cfg.train_size, "Training set size");
    app.add_option("--test-size", cfg.test_size, "Test set size");
    app.add_option("--graphs", cfg.graphs, "Input draws for qfim-scan");
    app.add_flag("--hea", cfg.hea, "Also train the hardware-efficient baseline");
    app.require_subcommand(0, 1);

    for (const char* name :
         {"variance-scan", "compare-analytic", "irrep-contributions", "qfim-scan", "train",
          "generalization", "trainability-table"}) {
      CLI::App* sub = app.add_subcommand(name);
      sub->fallthrough(true);
      sub->callback([&cfg, name] { cfg.experiment = name; });
    }

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e);
      return code == 0 ? 0 : 2;
    }

    if (!n_range.empty()) apply_n_range(n_range, cfg);
    if (cfg.experiment.empty()) {
      throw eqnn::ValidationError("no experiment selected (subcommand or config)");
    }
    eqnn::harness::run_experiment(cfg, std::cout);
    return 0;
  } catch (const eqnn::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const eqnn::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
