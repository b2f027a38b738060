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

#include "eqnn/repsn/schur_basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eqnn::repsn {
namespace {

// One spin-coupling path after q qubits. spins holds the doubled total spin
// after each qubit; rows[k] holds the coefficients of the ladder state with
// magnetic index tm = tj - 2k over the weight-((q - tm)/2) sector.
struct Path {
  std::vector<int> spins;
  std::vector<std::vector<double>> rows;
};

}  // namespace

SchurBasis::SchurBasis(int n, int cap) : n_(n), sectors_(std::max(n, 1)) {
  irreps_ = two_row_irreps(n, cap);

  // Per-stage sector tables for substrings of q qubits.
  std::vector<WeightSectors> stage;
  stage.reserve(static_cast<std::size_t>(n));
  for (int q = 1; q <= n; ++q) stage.emplace_back(q);

  std::vector<Path> paths;
  paths.push_back({{1}, {{1.0}, {1.0}}});  // |0> and |1> of the first qubit

  for (int q = 1; q < n; ++q) {
    const WeightSectors& prev = stage[static_cast<std::size_t>(q - 1)];
    const WeightSectors& next = stage[static_cast<std::size_t>(q)];
    std::vector<Path> grown;
    grown.reserve(paths.size() * 2);
    for (const Path& p : paths) {
      const int tj = p.spins.back();
      for (int step : {+1, -1}) {
        const int ntj = tj + step;
        if (ntj < 0) continue;
        Path child;
        child.spins = p.spins;
        child.spins.push_back(ntj);
        child.rows.resize(static_cast<std::size_t>(ntj) + 1);
        for (int k = 0; k <= ntj; ++k) {
          const int tm = ntj - 2 * k;
          const int w = (q + 1 - tm) / 2;
          const auto& states = next.states(w);
          std::vector<double>& row = child.rows[static_cast<std::size_t>(k)];
          row.assign(states.size(), 0.0);
          const double den = tj + 1;
          const double pa = (tj + tm + 1) / 2;
          const double pb = (tj - tm + 1) / 2;
          double ca = 0.0, cb = 0.0;  // weights of parent tm+-1 under new bit 0/1
          if (step == +1) {
            ca = std::sqrt(pa / den);
            cb = std::sqrt(pb / den);
          } else {
            ca = -std::sqrt(pb / den);
            cb = std::sqrt(pa / den);
          }
          for (std::size_t i = 0; i < states.size(); ++i) {
            const std::uint32_t z = states[i];
            const std::uint32_t parent = z >> 1;  // new qubit occupies the LSB
            if ((z & 1u) == 0u) {
              const int pk = (tj - (tm - 1)) / 2;
              if (tm - 1 >= -tj && tm - 1 <= tj)
                row[i] = ca * p.rows[static_cast<std::size_t>(pk)][static_cast<std::size_t>(
                                  prev.rank(parent))];
            } else {
              const int pk = (tj - (tm + 1)) / 2;
              if (tm + 1 >= -tj && tm + 1 <= tj)
                row[i] = cb * p.rows[static_cast<std::size_t>(pk)][static_cast<std::size_t>(
                                  prev.rank(parent))];
            }
          }
        }
        grown.push_back(std::move(child));
      }
    }
    paths = std::move(grown);
  }

  std::sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) {
    if (a.spins.back() != b.spins.back()) return a.spins.back() > b.spins.back();
    return a.spins < b.spins;
  });

  cols_.resize(irreps_.size());
  for (Path& p : paths) {
    const int m = (n_ - p.spins.back()) / 2;
    cols_[static_cast<std::size_t>(m)].push_back(std::move(p.rows));
  }
  for (std::size_t m = 0; m < irreps_.size(); ++m) {
    if (cols_[m].size() != static_cast<std::size_t>(irreps_[m].mult))
      throw std::logic_error("schur basis: path count does not match multiplicity");
    for (int nu = 0; nu < irreps_[m].mult; ++nu)
      for (int k = 0; k < irreps_[m].dim; ++k)
        index_map_.push_back({static_cast<int>(m), nu, k});
  }
}

const std::vector<double>& SchurBasis::column_sector(int m, int nu, int k) const {
  return cols_[static_cast<std::size_t>(m)][static_cast<std::size_t>(nu)]
              [static_cast<std::size_t>(k)];
}

Eigen::VectorXd SchurBasis::column(int m, int nu, int k) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim());
  const auto& states = sectors_.states(m + k);
  const auto& coef = column_sector(m, nu, k);
  for (std::size_t i = 0; i < states.size(); ++i) out[states[i]] = coef[i];
  return out;
}

Eigen::MatrixXd SchurBasis::matrix() const {
  if (n_ > 10) throw CapacityError("schur basis: dense matrix capped at n <= 10");
  Eigen::MatrixXd out(dim(), dim());
  for (std::size_t c = 0; c < index_map_.size(); ++c) {
    const ColumnIndex& ci = index_map_[c];
    out.col(static_cast<Eigen::Index>(c)) = column(ci.m, ci.nu, ci.k);
  }
  return out;
}

Vec SchurBasis::project(int m, int nu, const Vec& psi) const {
  const IrrepLabel& ir = irrep(m);
  Vec v(ir.dim);
  for (int k = 0; k < ir.dim; ++k) {
    const auto& states = sectors_.states(m + k);
    const auto& coef = column_sector(m, nu, k);
    Complex acc = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) acc += coef[i] * psi[states[i]];
    v[k] = acc;
  }
  return v;
}

Eigen::MatrixXd SchurBasis::q_matrix(int m, int nu) const {
  if (n_ > 10) throw CapacityError("schur basis: dense restriction maps capped at n <= 10");
  const IrrepLabel& ir = irrep(m);
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(ir.dim, static_cast<Eigen::Index>(dim()));
  for (int k = 0; k < ir.dim; ++k) Q.row(k) = column(m, nu, k).transpose();
  return Q;
}

Mat SchurBasis::restrict_dense(const Mat& A, int m, int nu) const {
  if ((A - A.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw ValidationError("restrict: operator must be Hermitian");
  const IrrepLabel& ir = irrep(m);
  const auto d = static_cast<Eigen::Index>(dim());
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(d, ir.dim);
  for (int k = 0; k < ir.dim; ++k) Q.col(k) = column(m, nu, k);
  return Q.transpose() * A * Q;
}

Mat SchurBasis::restrict_action(int m,
                                const std::function<void(const Vec&, Vec&)>& apply) const {
  const IrrepLabel& ir = irrep(m);
  Mat out(ir.dim, ir.dim);
  Vec in = Vec::Zero(dim());
  Vec acted(dim());
  for (int k = 0; k < ir.dim; ++k) {
    const auto& states = sectors_.states(m + k);
    const auto& coef = column_sector(m, 0, k);
    in.setZero();
    for (std::size_t i = 0; i < states.size(); ++i) in[states[i]] = coef[i];
    apply(in, acted);
    for (int kk = 0; kk < ir.dim; ++kk) {
      const auto& st2 = sectors_.states(m + kk);
      const auto& c2 = column_sector(m, 0, kk);
      Complex acc = 0.0;
      for (std::size_t i = 0; i < st2.size(); ++i) acc += c2[i] * acted[st2[i]];
      out(kk, k) = acc;
    }
  }
  return out;
}

Mat SchurBasis::state_block_sum(int m, const Vec& psi) const {
  const IrrepLabel& ir = irrep(m);
  Mat acc = Mat::Zero(ir.dim, ir.dim);
  for (int nu = 0; nu < ir.mult; ++nu) {
    const Vec v = project(m, nu, psi);
    acc.noalias() += v * v.adjoint();
  }
  return acc;
}

}  // namespace eqnn::repsn
