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

#include "eqnn/repsn/twirl.hpp"

#include "eqnn/repsn/permutation.hpp"

namespace eqnn::repsn {

Mat averaged_block(const SchurBasis& basis, const Mat& A, int m) {
  const IrrepLabel& ir = basis.irrep(m);
  Mat acc = Mat::Zero(ir.dim, ir.dim);
  for (int nu = 0; nu < ir.mult; ++nu) {
    const Eigen::MatrixXd Q = basis.q_matrix(m, nu);
    acc.noalias() += Q * A * Q.transpose();
  }
  return acc / static_cast<double>(ir.mult);
}

Mat twirl(const SchurBasis& basis, const Mat& A) {
  const auto d = static_cast<Eigen::Index>(basis.dim());
  Mat out = Mat::Zero(d, d);
  for (std::size_t m = 0; m < basis.irreps().size(); ++m) {
    const Mat avg = averaged_block(basis, A, static_cast<int>(m));
    for (int nu = 0; nu < basis.irrep(static_cast<int>(m)).mult; ++nu) {
      const Eigen::MatrixXd Q = basis.q_matrix(static_cast<int>(m), nu);
      out.noalias() += Q.transpose() * avg * Q;
    }
  }
  return out;
}

Mat twirl_group_average(int n, const Mat& A) {
  if (n > 6) throw CapacityError("twirl_group_average: capped at n <= 6");
  const auto perms = all_perms(n);
  Mat acc = Mat::Zero(A.rows(), A.cols());
  for (const Perm& p : perms) {
    const Eigen::MatrixXd R = permutation_matrix(n, p);
    acc.noalias() += R * A * R.transpose();
  }
  return acc / static_cast<double>(perms.size());
}

}  // namespace eqnn::repsn
