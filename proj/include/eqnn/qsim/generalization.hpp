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

// Measures the gap between train-set and test-set loss at random angles,
// normalized by the standard deviation of the per-state loss pooled over all
// draws, and compares its 90th percentile against the closed-form bound
// sqrt(dof/M) + sqrt(log(1/delta)/M).

#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "eqnn/common.hpp"
#include "eqnn/qsim/circuit.hpp"

namespace eqnn::qsim {

// Produces the (train, test) pair for one trial. Keyed on the trial index so
// experiments are reproducible and trials independent.
using DatasetSampler =
    std::function<std::pair<LabeledDataset, LabeledDataset>(std::uint64_t trial)>;

struct GeneralizationConfig {
  int n = 0;
  int train_size = 0;  // 0 picks the equivariant-space dimension
  int test_size = 0;   // 0 picks twice the train-size default
  int layers = 0;      // 0 picks the equivariant-space dimension
  int trials = 100;
  std::uint64_t seed = 0;
  double delta = 0.1;
  Measurement obs = Measurement::ProdX;
};

struct GeneralizationReport {
  int n = 0;
  int train_size = 0;
  int test_size = 0;
  int layers = 0;
  std::vector<double> normalized_errors;  // one per trial
  double percentile90 = 0.0;
  double bound = 0.0;
};

double generalization_bound(int dof, int train_size, double delta);

// Linear-interpolation quantile of the values, q in [0, 1].
double quantile(std::vector<double> values, double q);

GeneralizationReport generalization_experiment(const GeneralizationConfig& cfg,
                                               const DatasetSampler& sampler);

}  // namespace eqnn::qsim
