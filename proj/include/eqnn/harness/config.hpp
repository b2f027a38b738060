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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqnn/common.hpp"

namespace eqnn::harness {

// One flat record drives every subcommand; unused fields keep defaults.
// serialize/parse round-trip exactly.
struct ExperimentConfig {
  std::string experiment;      // subcommand name
  int n = 0;                   // single size; 0 defers to [n_min, n_max]
  int n_min = 0;
  int n_max = 0;
  std::string depth_rule = "te";  // "<L>" | "<c>n" | "te" | "<k>te" | "grid"
  std::string family = "er0.4";
  std::string gen = "sum_x";
  std::string obs = "sum_x";
  int samples = 2500;
  int states = 50;   // input draws per scan cell
  int params = 50;   // angle draws per input
  int draws = 40;    // family draws per size for classification
  std::uint64_t seed = 1;
  std::string out;   // output path; empty writes to stdout
  double p = 0.4;
  double phi = kPi;
  int restarts = 5;
  int trials = 100;
  int train_size = 0;  // 0 picks the per-command default
  int test_size = 0;
  int graphs = 10;
  bool hea = false;  // add the hardware-efficient baseline in train runs

  bool operator==(const ExperimentConfig&) const = default;
};

// "key = value" lines; '#' starts a comment.
std::string serialize(const ExperimentConfig& cfg);
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

// Sizes the config asks for: the single n, or n_min..n_max inclusive.
std::vector<int> config_sizes(const ExperimentConfig& cfg);

// "120" -> 120; "3n" -> 3n; "te" -> equivariant dimension; "5te" -> 5*that.
int resolve_depth(const std::string& rule, int n);

}  // namespace eqnn::harness
