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

// Reduced-space simulator for invariant circuits. Every generator and
// measurement acts within d_lambda-dim blocks, so a dataset collapses to one
// accumulator per block: loss = sum_lambda Tr[U_lambda Sbar_lambda
// U_lambda^dag O_lambda] with Sbar_lambda = sum_i c_i sum_nu Q|psi_i><psi_i|Q^dag.
// Identical results to the statevector path at a fraction of the cost once
// depth or dataset size grows.

#pragma once

#include <vector>

#include "eqnn/common.hpp"
#include "eqnn/qsim/circuit.hpp"
#include "eqnn/repsn/schur_basis.hpp"

namespace eqnn::qsim {

class BlockModel {
 public:
  BlockModel(int n, Measurement obs);

  int n() const { return n_; }
  Measurement obs() const { return obs_; }
  const repsn::SchurBasis& basis() const { return basis_; }
  int blocks() const { return static_cast<int>(basis_.irreps().size()); }

  const Mat& h_block(Generator g, int m) const;
  const Mat& o_block(int m) const { return o_blocks_[static_cast<std::size_t>(m)]; }

  using Blocks = std::vector<Mat>;  // one matrix per lambda

  Blocks compile_state(const Vec& psi) const;
  Blocks compile(const std::vector<Vec>& states, const std::vector<double>& weights) const;

  // U_lambda(theta) for all blocks, built layer by layer.
  Blocks evolve_unitaries(const std::vector<Layer>& layers) const;
  void apply_layer(Blocks& u, Generator g, double theta) const;

  double loss(const Blocks& u, const Blocks& sbar) const;
  double loss(const std::vector<Layer>& layers, const Blocks& sbar) const;
  double loss_and_grad(const std::vector<Layer>& layers, const Blocks& sbar, RVec& grad) const;

  // Per-state expectations under shared unitaries; used for accuracies.
  RVec per_state_losses(const std::vector<Layer>& layers, const std::vector<Vec>& states) const;

 private:
  Mat layer_exp(Generator g, int m, double theta) const;

  int n_;
  Measurement obs_;
  repsn::SchurBasis basis_;
  std::vector<Mat> h_blocks_[3];  // indexed by Generator cast to int
  std::vector<Mat> o_blocks_;
  // Eigendecompositions of each generator block for fast exponentials.
  std::vector<RVec> h_evals_[3];
  std::vector<Mat> h_evecs_[3];
};

}  // namespace eqnn::qsim
