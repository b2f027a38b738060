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
#include "eqnn/qsim/block_model.hpp"
#include "eqnn/qsim/circuit.hpp"
#include "eqnn/qsim/hea.hpp"

namespace eqnn::qsim {

struct TrainConfig {
  int restarts = 1;
  std::uint64_t seed = 0;
  int max_iter = 400;
  double grad_tol = 1e-10;
  double f_tol = 1e-14;
};

struct TrainResult {
  RVec theta;
  double loss = 0.0;
  std::vector<double> trace;  // winning restart, best-so-far per iteration
  double train_accuracy = 0.0;
  int best_restart = 0;
  int iterations = 0;
  int evaluations = 0;
  std::string status;
};

// Minimizes the weighted loss over the circuit angles, keeping the layer
// generators fixed. Restart r draws its start from (seed, r), so results are
// reproducible and restarts are independent of each other.
TrainResult train(const BlockModel& model, const std::vector<Generator>& gens,
                  const LabeledDataset& data, const TrainConfig& cfg = {});

TrainResult train(const Circuit& circuit, const LabeledDataset& data, Measurement obs,
                  const TrainConfig& cfg = {});

TrainResult train_hea(const HeaCircuit& circuit, const LabeledDataset& data,
                      const TrainConfig& cfg = {});

// Fraction of states whose evolved expectation sign matches the label.
double eqnn_accuracy(const BlockModel& model, const std::vector<Generator>& gens,
                     const RVec& theta, const std::vector<Vec>& states,
                     const std::vector<int>& labels);
double hea_accuracy(const HeaCircuit& circuit, const RVec& params,
                    const std::vector<Vec>& states, const std::vector<int>& labels);

}  // namespace eqnn::qsim
