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

// Closed-form gradient variance in the deep-circuit limit: per block,
// prefactor 2d/(d^2-1)^2 times the deltas of the restricted generator,
// observable, and weighted input average. One-dimensional blocks contribute
// exactly zero.

#pragma once

#include <optional>
#include <vector>

#include "eqnn/common.hpp"
#include "eqnn/qsim/circuit.hpp"
#include "eqnn/repsn/irreps.hpp"
#include "eqnn/repsn/schur_basis.hpp"

namespace eqnn::variance {

struct BlockContribution {
  repsn::IrrepLabel irrep;
  double prefactor = 0.0;
  double delta_h = 0.0;
  double delta_o = 0.0;
  double delta_sigma = 0.0;
  double contribution = 0.0;
};

struct EmpiricalEstimate {
  int samples = 0;
  double mean = 0.0;
  double variance = 0.0;
  double mean_stderr = 0.0;
  double variance_stderr = 0.0;
};

struct VarianceReport {
  int n = 0;
  qsim::Generator gen = qsim::Generator::SumX;
  qsim::Measurement obs = qsim::Measurement::SumX;
  std::vector<BlockContribution> blocks;
  double total = 0.0;
  std::optional<EmpiricalEstimate> empirical;
};

// Deltas of the restricted generator/observable including the scalar
// normalization each operator carries.
double generator_block_delta(qsim::Generator gen, int d_lambda, int n);
double observable_block_delta(qsim::Measurement obs, int d_lambda, int n);

// One accumulator per block: sum_i c_i sum_nu Q |psi_i><psi_i| Q^dag.
std::vector<Mat> sigma_block_sums(const repsn::SchurBasis& basis,
                                  const std::vector<Vec>& states,
                                  const std::vector<double>& weights);

VarianceReport predicted_variance(qsim::Generator gen, qsim::Measurement obs,
                                  const std::vector<Mat>& sigma_blocks,
                                  const repsn::SchurBasis& basis);
VarianceReport predicted_variance(qsim::Generator gen, qsim::Measurement obs,
                                  const std::vector<Vec>& states,
                                  const std::vector<double>& weights,
                                  const repsn::SchurBasis& basis);

// Expectation of delta(sum_nu rho^nu) for a dense-Haar pure state:
// m_lambda (d_lambda^2 - 1) / (2^n (2^n + 1)).
double haar_expected_delta(int n, int m);

// Upper bound (sum_i |c_i| sqrt(delta_i))^2 on the delta of the weighted
// average in block m.
double ensemble_delta_bound(const std::vector<Vec>& states, const std::vector<double>& weights,
                            int m, const repsn::SchurBasis& basis);

}  // namespace eqnn::variance
