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

#include "eqnn/qsim/block_model.hpp"

#include <Eigen/Eigenvalues>

namespace eqnn::qsim {

BlockModel::BlockModel(int n, Measurement obs) : n_(n), obs_(obs), basis_(n) {
  if (n < 2) throw ValidationError("BlockModel: needs n >= 2");
  const int nb = blocks();
  for (Generator g : {Generator::SumX, Generator::SumY, Generator::SumZZ}) {
    const auto gi = static_cast<std::size_t>(g);
    h_blocks_[gi].reserve(static_cast<std::size_t>(nb));
    for (int m = 0; m < nb; ++m) {
      Mat h = basis_.restrict_action(
          m, [&](const Vec& in, Vec& out) { repsn::apply_generator(n_, g, in, out); });
      h = Mat(0.5 * (h + h.adjoint()));  // symmetrize away rounding noise
      Eigen::SelfAdjointEigenSolver<Mat> es(h);
      h_evals_[gi].push_back(es.eigenvalues());
      h_evecs_[gi].push_back(es.eigenvectors());
      h_blocks_[gi].push_back(std::move(h));
    }
  }
  o_blocks_.reserve(static_cast<std::size_t>(nb));
  for (int m = 0; m < nb; ++m)
    o_blocks_.push_back(basis_.restrict_action(
        m, [&](const Vec& in, Vec& out) { repsn::apply_measurement(n_, obs_, in, out); }));
}

const Mat& BlockModel::h_block(Generator g, int m) const {
  return h_blocks_[static_cast<std::size_t>(g)][static_cast<std::size_t>(m)];
}

BlockModel::Blocks BlockModel::compile_state(const Vec& psi) const {
  if (psi.size() != static_cast<Eigen::Index>(basis_.dim()))
    throw ValidationError("BlockModel: state dimension mismatch");
  Blocks out;
  out.reserve(static_cast<std::size_t>(blocks()));
  for (int m = 0; m < blocks(); ++m) out.push_back(basis_.state_block_sum(m, psi));
  return out;
}

BlockModel::Blocks BlockModel::compile(const std::vector<Vec>& states,
                                       const std::vector<double>& weights) const {
  if (states.size() != weights.size())
    throw ValidationError("BlockModel: states and weights differ in length");
  Blocks acc;
  for (int m = 0; m < blocks(); ++m) {
    const int d = basis_.irrep(m).dim;
    acc.push_back(Mat::Zero(d, d));
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    const Blocks b = compile_state(states[i]);
    for (int m = 0; m < blocks(); ++m) acc[static_cast<std::size_t>(m)] += weights[i] * b[static_cast<std::size_t>(m)];
  }
  return acc;
}

Mat BlockModel::layer_exp(Generator g, int m, double theta) const {
  const auto gi = static_cast<std::size_t>(g);
  const RVec& e = h_evals_[gi][static_cast<std::size_t>(m)];
  const Mat& v = h_evecs_[gi][static_cast<std::size_t>(m)];
  Vec phases(e.size());
  for (Eigen::Index i = 0; i < e.size(); ++i)
    phases[i] = Complex(std::cos(theta * e[i]), -std::sin(theta * e[i]));
  return v * phases.asDiagonal() * v.adjoint();
}

void BlockModel::apply_layer(Blocks& u, Generator g, double theta) const {
  for (int m = 0; m < blocks(); ++m)
    u[static_cast<std::size_t>(m)] = layer_exp(g, m, theta) * u[static_cast<std::size_t>(m)];
}

BlockModel::Blocks BlockModel::evolve_unitaries(const std::vector<Layer>& layers) const {
  Blocks u;
  for (int m = 0; m < blocks(); ++m) {
    const int d = basis_.irrep(m).dim;
    u.push_back(Mat::Identity(d, d));
  }
  for (const Layer& l : layers) apply_layer(u, l.gen, l.theta);
  return u;
}

double BlockModel::loss(const Blocks& u, const Blocks& sbar) const {
  double acc = 0.0;
  for (int m = 0; m < blocks(); ++m) {
    const auto mi = static_cast<std::size_t>(m);
    acc += (u[mi] * sbar[mi] * u[mi].adjoint() * o_blocks_[mi]).trace().real();
  }
  return acc;
}

double BlockModel::loss(const std::vector<Layer>& layers, const Blocks& sbar) const {
  return loss(evolve_unitaries(layers), sbar);
}

double BlockModel::loss_and_grad(const std::vector<Layer>& layers, const Blocks& sbar,
                                 RVec& grad) const {
  const int L = static_cast<int>(layers.size());
  grad = RVec::Zero(L);
  const Blocks u = evolve_unitaries(layers);
  Blocks p(sbar.size()), q(sbar.size());
  double lossv = 0.0;
  for (int m = 0; m < blocks(); ++m) {
    const auto mi = static_cast<std::size_t>(m);
    p[mi] = u[mi] * sbar[mi] * u[mi].adjoint();
    q[mi] = o_blocks_[mi];
    lossv += (p[mi] * q[mi]).trace().real();
  }
  for (int mu = L - 1; mu >= 0; --mu) {
    const Layer& l = layers[static_cast<std::size_t>(mu)];
    double g = 0.0;
    for (int m = 0; m < blocks(); ++m) {
      const auto mi = static_cast<std::size_t>(m);
      g += 2.0 * (h_block(l.gen, m) * p[mi] * q[mi]).trace().imag();
    }
    grad[mu] = g;
    for (int m = 0; m < blocks(); ++m) {
      const auto mi = static_cast<std::size_t>(m);
      const Mat e = layer_exp(l.gen, m, -l.theta);
      p[mi] = e * p[mi] * e.adjoint();
      q[mi] = e * q[mi] * e.adjoint();
    }
  }
  return lossv;
}

RVec BlockModel::per_state_losses(const std::vector<Layer>& layers,
                                  const std::vector<Vec>& states) const {
  const Blocks u = evolve_unitaries(layers);
  RVec vals(static_cast<Eigen::Index>(states.size()));
  for (std::size_t i = 0; i < states.size(); ++i) {
    const Blocks b = compile_state(states[i]);
    double acc = 0.0;
    for (int m = 0; m < blocks(); ++m) {
      const auto mi = static_cast<std::size_t>(m);
      acc += (u[mi] * b[mi] * u[mi].adjoint() * o_blocks_[mi]).trace().real();
    }
    vals[static_cast<Eigen::Index>(i)] = acc;
  }
  return vals;
}

}  // namespace eqnn::qsim
