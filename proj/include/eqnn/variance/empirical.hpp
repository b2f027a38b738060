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
#include <vector>

#include "eqnn/common.hpp"
#include "eqnn/qsim/block_model.hpp"
#include "eqnn/qsim/circuit.hpp"
#include "eqnn/variance/predict.hpp"

namespace eqnn::variance {

// Mean and unbiased variance of a sample, with jackknife standard errors
// for both.
EmpiricalEstimate sample_stats(const std::vector<double>& values);

// One layer per generator, consecutive, starting at the cycle boundary
// nearest the circuit middle.
std::vector<int> middle_positions(int layers);

// Distribution of the loss derivative at the given layer positions over
// uniform angle draws. Derivatives for all positions come from one adjoint
// sweep per draw; draw s is keyed on (seed, s).
std::vector<EmpiricalEstimate> empirical_gradient_stats(
    const qsim::BlockModel& model, int layers, const std::vector<int>& positions,
    const qsim::LabeledDataset& data, int samples, std::uint64_t seed);

EmpiricalEstimate empirical_variance(const qsim::BlockModel& model, int layers, int position,
                                     const qsim::LabeledDataset& data, int samples,
                                     std::uint64_t seed);

}  // namespace eqnn::variance
