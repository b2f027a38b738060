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

#include "eqnn/repsn/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "eqnn/repsn/sectors.hpp"

namespace eqnn::repsn {

Perm identity_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_perm(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[static_cast<std::size_t>(v)])
      return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

Perm inverse_perm(const Perm& p) {
  Perm inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return inv;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    out[i] = p[static_cast<std::size_t>(q[i])];
  return out;
}

Perm random_perm(int n, Rng& rng) {
  Perm p = identity_perm(n);
  rng.shuffle(p);
  return p;
}

std::vector<Perm> all_perms(int n) {
  if (n < 1 || n > 8) throw CapacityError("all_perms: capped at n <= 8");
  Perm p = identity_perm(n);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::uint32_t permuted_basis_index(int n, const Perm& p, std::uint32_t z) {
  std::uint32_t out = 0;
  for (int j = 0; j < n; ++j)
    if (z & qubit_mask(n, j)) out |= qubit_mask(n, p[static_cast<std::size_t>(j)]);
  return out;
}

void apply_permutation(int n, const Perm& p, const Vec& psi, Vec& out) {
  const std::uint32_t d = 1u << n;
  out.resize(d);
  for (std::uint32_t z = 0; z < d; ++z) out[permuted_basis_index(n, p, z)] = psi[z];
}

Eigen::MatrixXd permutation_matrix(int n, const Perm& p) {
  if (n > 10) throw CapacityError("permutation_matrix: capped at n <= 10");
  if (static_cast<int>(p.size()) != n || !is_perm(p)) {
    throw ValidationError("permutation_matrix: not a permutation of n items");
  }
  const std::uint32_t d = 1u << n;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(d, d);
  for (std::uint32_t z = 0; z < d; ++z) out(permuted_basis_index(n, p, z), z) = 1.0;
  return out;
}

}  // namespace eqnn::repsn
