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

#include <string>
#include <utility>

#include "eqnn/common.hpp"
#include "eqnn/qsim/circuit.hpp"
#include "eqnn/states/graph.hpp"

namespace eqnn::states {

// Balanced graph-classification task: M/2 connected (+1) and M/2
// disconnected (-1) edge-probability-p graph states, rejection-sampled so
// each bin keeps its natural conditional distribution. Weights are the hinge
// coefficients -y_i/M.
qsim::LabeledDataset classification_dataset(int n, int m, double p, double phi, Rng& rng);

// Binary state file: 8-byte little-endian qubit count, then interleaved
// re/im doubles.
void save_state(const std::string& path, int n, const Vec& psi);
std::pair<int, Vec> load_state(const std::string& path);

}  // namespace eqnn::states
