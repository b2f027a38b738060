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

// Projection onto the permutation commutant. Implemented by averaging the
// block restrictions over the multiplicity index and reassembling; the
// explicit group average is kept as a small-n oracle.

#pragma once

#include "eqnn/common.hpp"
#include "eqnn/repsn/schur_basis.hpp"

namespace eqnn::repsn {

// Averaged restriction (1/m_lambda) sum_nu Q_lambda^nu A (Q_lambda^nu)^dagger.
Mat averaged_block(const SchurBasis& basis, const Mat& A, int m);

// sum_lambda sum_nu (Q_lambda^nu)^dagger Abar_lambda Q_lambda^nu.
Mat twirl(const SchurBasis& basis, const Mat& A);

// (1/n!) sum_pi R(pi) A R(pi)^T; capped at n <= 6.
Mat twirl_group_average(int n, const Mat& A);

}  // namespace eqnn::repsn
