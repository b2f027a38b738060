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

// Parameterized circuits over the invariant generator set, weighted-dataset
// losses, analytic gradients by the adjoint sweep, and the quantum Fisher
// information matrix with its rank-saturation search.

#pragma once

#include <cstdint>
#include <vector>

#include "eqnn/common.hpp"
#include "eqnn/qsim/statevector.hpp"

namespace eqnn::qsim {

struct Layer {
  Generator gen = Generator::SumX;
  double theta = 0.0;
};

struct Circuit {
  int n = 0;
  std::vector<Layer> layers;
};

// Generators for layers 0..L-1 in the fixed cycle (SumZZ, SumX, SumY).
std::vector<Generator> cycle_generators(int L);
Circuit make_cycled_circuit(int n, const RVec& thetas);
RVec uniform_angles(int L, Rng& rng);  // i.i.d. uniform on [-pi, pi]

struct LabeledDataset {
  std::vector<Vec> states;
  std::vector<int> labels;      // +1 / -1; empty when unlabeled
  std::vector<double> weights;  // c_i
  std::size_t size() const { return states.size(); }
};

// States must match dimension 2^n; weights must pair with states.
void check_dataset(int n, const LabeledDataset& data);

Vec evolve(const Circuit& c, Vec psi);

// sum_i c_i <psi_i| U^dag O U |psi_i>. Throws ValidationError when a state's
// dimension does not match the circuit.
double empirical_loss(const Circuit& c, const LabeledDataset& data, Measurement obs);

// Adjoint-sweep gradient of empirical_loss with respect to every layer angle.
RVec gradient(const Circuit& c, const LabeledDataset& data, Measurement obs);

// Per-state expectations after evolving, and the fraction whose sign matches
// the label.
RVec per_state_losses(const Circuit& c, const std::vector<Vec>& states, Measurement obs);
double accuracy_from_losses(const RVec& values, const std::vector<int>& labels);

// F_{jk} = 4 Re[<d_j psi|d_k psi> - <d_j psi|psi><psi|d_k psi>].
RMat qfim(const Circuit& c, const Vec& input);

// Count of eigenvalues above tol times the largest one. A largest eigenvalue
// below tol itself counts as rank zero.
int qfim_rank(const RMat& f, double tol = 1e-8);

struct OverparamResult {
  int l_ovp = 0;           // smallest L whose rank equals the rank at l_max
  int rank = 0;            // rank at l_max
  bool saturated = false;  // false when the rank is still growing at l_max
  std::vector<int> ranks;  // rank per L = 1..l_max at the drawn angles
};

// Ranks come from leading principal blocks of one QFIM at random angles along
// the fixed generator cycle, so the rank column is nondecreasing by
// construction.
OverparamResult find_overparam_depth(int n, const Vec& input, int l_max, Rng& rng);

}  // namespace eqnn::qsim
