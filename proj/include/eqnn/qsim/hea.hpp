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

// Hardware-efficient comparison baseline: per layer, an independently
// parameterized Y rotation on every qubit followed by a line of CNOTs on
// adjacent pairs. Measures the two-qubit local observable (X_0 + X_1)/2,
// which breaks permutation symmetry on purpose.

#pragma once

#include <vector>

#include "eqnn/common.hpp"
#include "eqnn/qsim/circuit.hpp"

namespace eqnn::qsim {

struct HeaCircuit {
  int n = 0;
  int layers = 0;
};

inline int hea_param_count(const HeaCircuit& c) { return c.n * c.layers; }

Vec hea_apply(const HeaCircuit& c, const RVec& params, Vec psi);

// (X_0 + X_1)/2 expectation of each evolved state.
RVec hea_per_state_losses(const HeaCircuit& c, const RVec& params,
                          const std::vector<Vec>& states);

double hea_loss(const HeaCircuit& c, const RVec& params, const LabeledDataset& data);
double hea_loss_and_grad(const HeaCircuit& c, const RVec& params, const LabeledDataset& data,
                         RVec& grad);

}  // namespace eqnn::qsim
