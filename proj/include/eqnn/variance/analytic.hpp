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

// Closed forms for the delta functional of restricted equivariant operator
// sums. The formulas cover the unnormalized sums; scalar prefactors enter as
// delta(s*A) = s^2 * delta(A).

#pragma once

#include "eqnn/common.hpp"

namespace eqnn::variance {

enum class OpClass {
  OneBody,       // sum_j chi_j
  TwoBody,       // sum_{j<k} chi_j chi_k
  GlobalString,  // prod_j chi_j
  KLocal,        // sum_{|S|=k} chi_S
};

// K_k(w; n) = sum_l C(n-w, k-l) C(w, l) (-1)^l. Integer-valued.
double krawtchouk(int k, int w, int n);

// delta of the operator restricted to a block of dimension d_lambda. The
// block holds one eigenvalue per weight w = m..n-m, so d_lambda must equal
// n - 2m + 1 for some valid m. k_local is consumed only by KLocal.
double analytic_delta(OpClass op, int d_lambda, int n, int k_local = 1);

}  // namespace eqnn::variance
