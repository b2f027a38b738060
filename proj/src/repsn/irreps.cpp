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

#include "eqnn/repsn/irreps.hpp"

#include "eqnn/common.hpp"

namespace eqnn::repsn {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // exact at every step: r holds C(n - k + i - 1, i - 1) * ... pattern;
    // multiply-then-divide stays integral because i consecutive integers
    // contain a multiple of i.
    std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (r > ~0ULL / num) throw CapacityError("binomial: overflow");
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::uint64_t tetrahedral(int n) {
  if (n < 1) throw ValidationError("tetrahedral: n must be positive");
  return binomial(n + 3, 3);
}

std::uint64_t hook_length_dim(const std::vector<int>& rows) {
  if (rows.empty() || rows.size() > 2) {
    throw ValidationError("hook_length_dim: only one- or two-row shapes occur here");
  }
  int r1 = rows[0];
  int r2 = rows.size() == 2 ? rows[1] : 0;
  if (r1 < r2 || r2 < 0) throw ValidationError("hook_length_dim: rows must be non-increasing");
  int n = r1 + r2;
  return binomial(n, r2) - binomial(n, r2 - 1);
}

std::vector<IrrepLabel> two_row_irreps(int n, int cap) {
  if (n < 1 || n > cap) throw CapacityError("two_row_irreps: n outside [1, cap]");
  std::vector<IrrepLabel> out;
  out.reserve(static_cast<std::size_t>(n / 2 + 1));
  for (int m = 0; m <= n / 2; ++m) {
    IrrepLabel l;
    l.n = n;
    l.m = m;
    l.dim = n - 2 * m + 1;
    l.mult = static_cast<int>(hook_length_dim({n - m, m}));
    out.push_back(l);
  }
  return out;
}

}  // namespace eqnn::repsn
