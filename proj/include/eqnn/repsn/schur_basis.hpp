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

// Orthogonal basis in which wire permutations and all equivariant operators
// are simultaneously block-diagonal. Built by coupling qubits one at a time
// through the two-term Clebsch-Gordan rules for j x 1/2 -> j +- 1/2.
//
// Basis vectors are indexed by (m, nu, k): m labels the block lambda =
// (n-m, m); nu enumerates spin-coupling paths ending at total spin (n-2m)/2
// in lexicographic path order; k runs down the magnetic ladder, i.e. over
// Hamming weights w = m + k. Each vector is real and supported on a single
// weight sector, so columns are stored as dense sector slices.

#pragma once

#include <functional>
#include <vector>

#include "eqnn/common.hpp"
#include "eqnn/repsn/irreps.hpp"
#include "eqnn/repsn/sectors.hpp"

namespace eqnn::repsn {

class SchurBasis {
 public:
  explicit SchurBasis(int n, int cap = kDefaultIrrepCap);

  int n() const { return n_; }
  std::uint32_t dim() const { return 1u << n_; }
  const std::vector<IrrepLabel>& irreps() const { return irreps_; }
  const IrrepLabel& irrep(int m) const { return irreps_[static_cast<std::size_t>(m)]; }
  const WeightSectors& sectors() const { return sectors_; }

  struct ColumnIndex {
    int m = 0;
    int nu = 0;
    int k = 0;
  };
  // Column order: m ascending, then nu, then k.
  const std::vector<ColumnIndex>& index_map() const { return index_map_; }

  // Coefficients of basis vector (m, nu, k) over sectors().states(m + k).
  const std::vector<double>& column_sector(int m, int nu, int k) const;

  // Full 2^n embedding of one basis vector.
  Eigen::VectorXd column(int m, int nu, int k) const;

  // Dense basis matrix with columns in index_map order; capped at n <= 10.
  Eigen::MatrixXd matrix() const;

  // v_k = <(m, nu, k) | psi>, the coordinates of psi in one block copy.
  Vec project(int m, int nu, const Vec& psi) const;

  // Q_lambda^nu as a dense d_lambda x 2^n matrix; capped at n <= 10.
  Eigen::MatrixXd q_matrix(int m, int nu) const;

  // Q_lambda^nu A (Q_lambda^nu)^dagger. Rejects A that is not Hermitian to
  // 1e-10.
  Mat restrict_dense(const Mat& A, int m, int nu) const;

  // Same restriction for an operator given by its action on statevectors
  // (out must be preallocated to 2^n and is overwritten). Uses the nu = 0
  // copy; for equivariant operators every copy agrees.
  Mat restrict_action(int m, const std::function<void(const Vec&, Vec&)>& apply) const;

  // sum_nu Q_lambda^nu |psi><psi| (Q_lambda^nu)^dagger.
  Mat state_block_sum(int m, const Vec& psi) const;

 private:
  int n_;
  std::vector<IrrepLabel> irreps_;
  WeightSectors sectors_;
  // cols_[m][nu][k] over the weight-(m+k) sector.
  std::vector<std::vector<std::vector<std::vector<double>>>> cols_;
  std::vector<ColumnIndex> index_map_;
};

}  // namespace eqnn::repsn
