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

// Two-row irrep bookkeeping for the symmetric group acting on n qubits by
// wire permutation. Blocks are labeled by lambda = (n-m, m), m = 0..n/2.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace eqnn::repsn {

inline constexpr int kDefaultIrrepCap = 14;

struct IrrepLabel {
  int n = 0;
  int m = 0;    // second row length; lambda = (n-m, m)
  int dim = 0;  // d_lambda = n - 2m + 1
  int mult = 0; // m_lambda: multiplicity of the block
};

// Exact binomial coefficient; 0 when k < 0 or k > n. Overflow-checked.
std::uint64_t binomial(int n, int k);

// C(n+3, 3): the block-dimension-squared sum for n qubits, which is also the
// free-parameter count of an equivariant unitary.
std::uint64_t tetrahedral(int n);

// Number of standard Young tableaux of a two-row shape (rows...); the
// hook-length product reduces to C(n, r2) - C(n, r2 - 1) for two rows.
std::uint64_t hook_length_dim(const std::vector<int>& rows);

// One label per m = 0..floor(n/2), in increasing m. Throws CapacityError for
// n outside [1, cap].
std::vector<IrrepLabel> two_row_irreps(int n, int cap = kDefaultIrrepCap);

// Hamming weights supported inside block m run over w = m..n-m; the magnetic
// index k = w - m counts them from the top of the spin ladder.
inline int block_weight(int m, int k) { return m + k; }

}  // namespace eqnn::repsn
