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

// Labels an input-state family by how its dominant block delta scales with
// qubit count: log D is fit against a + b*log n and a - b*n, and the AIC gap
// between the two models decides the verdict.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqnn/common.hpp"
#include "eqnn/repsn/schur_basis.hpp"
#include "eqnn/states/families.hpp"

namespace eqnn::variance {

enum class Trainability { Trainable, Untrainable, Inconclusive };

std::string trainability_name(Trainability t);

struct TrainabilityReport {
  Trainability verdict = Trainability::Inconclusive;
  double aic_poly = 0.0;
  double aic_exp = 0.0;
  double d_aic = 0.0;       // aic_exp - aic_poly; large positive favors poly
  double poly_slope = 0.0;  // b in D ~ n^b
  double exp_rate = 0.0;    // b in D ~ exp(-b n)
  bool degenerate = false;  // a mean delta was <= 0
  std::vector<int> ns;
  std::vector<double> mean_deltas;
};

// max over blocks of delta(sum_nu rho^nu) for a pure state.
double max_block_delta(const repsn::SchurBasis& basis, const Vec& psi);

// ds holds the per-n mean of max_block_delta; needs at least 4 sizes.
TrainabilityReport classify_trainability(const std::vector<int>& ns,
                                         const std::vector<double>& ds);

// Samples the family at each size and classifies. Draw j at size n is keyed
// on (seed, n, j).
TrainabilityReport classify_family(const states::StateFamilySpec& spec,
                                   const std::vector<int>& ns, int draws, std::uint64_t seed);

}  // namespace eqnn::variance
