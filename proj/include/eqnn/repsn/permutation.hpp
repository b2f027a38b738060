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

// Wire-permutation action on n-qubit states. A permutation pi moves the bit
// at wire j to wire pi(j), so the new bit at wire i is the old bit at
// pi^{-1}(i); with this convention R(pi) R(sigma) = R(pi o sigma) where
// (pi o sigma)(i) = pi(sigma(i)).

#pragma once

#include <cstdint>
#include <vector>

#include "eqnn/common.hpp"

namespace eqnn::repsn {

using Perm = std::vector<int>;

Perm identity_perm(int n);
bool is_perm(const Perm& p);
Perm inverse_perm(const Perm& p);
// (compose(p, q))(i) = p(q(i)).
Perm compose(const Perm& p, const Perm& q);
Perm random_perm(int n, Rng& rng);
// All n! permutations in lexicographic order; capped at n <= 8.
std::vector<Perm> all_perms(int n);

// Image of basis index z under the wire permutation.
std::uint32_t permuted_basis_index(int n, const Perm& p, std::uint32_t z);

// out[tau(z)] = psi[z]; out must not alias psi.
void apply_permutation(int n, const Perm& p, const Vec& psi, Vec& out);

// Dense 0/1 representation matrix; capped at n <= 10.
Eigen::MatrixXd permutation_matrix(int n, const Perm& p);

}  // namespace eqnn::repsn
