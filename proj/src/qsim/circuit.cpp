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

#include "eqnn/qsim/circuit.hpp"

#include <Eigen/Eigenvalues>

namespace eqnn::qsim {

std::vector<Generator> cycle_generators(int L) {
  std::vector<Generator> out(static_cast<std::size_t>(L));
  for (int l = 0; l < L; ++l) out[static_cast<std::size_t>(l)] = repsn::kGeneratorCycle[l % 3];
  return out;
}

Circuit make_cycled_circuit(int n, const RVec& thetas) {
  Circuit c;
  c.n = n;
  const auto gens = cycle_generators(static_cast<int>(thetas.size()));
  c.layers.resize(gens.size());
  for (std::size_t l = 0; l < gens.size(); ++l)
    c.layers[l] = {gens[l], thetas[static_cast<Eigen::Index>(l)]};
  return c;
}

RVec uniform_angles(int L, Rng& rng) {
  RVec t(L);
  for (int l = 0; l < L; ++l) t[l] = rng.uniform(-kPi, kPi);
  return t;
}

Vec evolve(const Circuit& c, Vec psi) {
  for (const Layer& l : c.layers) apply_layer_inplace(c.n, l.gen, l.theta, psi);
  return psi;
}

void check_dataset(int n, const LabeledDataset& data) {
  const auto d = static_cast<Eigen::Index>(1u << n);
  for (const Vec& s : data.states)
    if (s.size() != d) throw ValidationError("dataset state dimension does not match circuit");
  if (data.weights.size() != data.states.size())
    throw ValidationError("dataset weights and states differ in length");
}

double empirical_loss(const Circuit& c, const LabeledDataset& data, Measurement obs) {
  check_dataset(c.n, data);
  double acc = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i)
    acc += data.weights[i] * expectation(c.n, obs, evolve(c, data.states[i]));
  return acc;
}

RVec gradient(const Circuit& c, const LabeledDataset& data, Measurement obs) {
  check_dataset(c.n, data);
  const int L = static_cast<int>(c.layers.size());
  RVec grad = RVec::Zero(L);
  Vec hq(static_cast<Eigen::Index>(1u << c.n));
  for (std::size_t i = 0; i < data.size(); ++i) {
    Vec psi = evolve(c, data.states[i]);
    Vec q(psi.size());
    repsn::apply_measurement(c.n, obs, psi, q);
    for (int mu = L - 1; mu >= 0; --mu) {
      const Layer& l = c.layers[static_cast<std::size_t>(mu)];
      repsn::apply_generator(c.n, l.gen, q, hq);
      grad[mu] += data.weights[i] * (-2.0) * psi.dot(hq).imag();
      apply_layer_inplace(c.n, l.gen, -l.theta, psi);
      apply_layer_inplace(c.n, l.gen, -l.theta, q);
    }
  }
  return grad;
}

RVec per_state_losses(const Circuit& c, const std::vector<Vec>& states, Measurement obs) {
  RVec vals(static_cast<Eigen::Index>(states.size()));
  for (std::size_t i = 0; i < states.size(); ++i)
    vals[static_cast<Eigen::Index>(i)] = expectation(c.n, obs, evolve(c, states[i]));
  return vals;
}

double accuracy_from_losses(const RVec& values, const std::vector<int>& labels) {
  if (static_cast<std::size_t>(values.size()) != labels.size())
    throw ValidationError("accuracy: values and labels differ in length");
  if (labels.empty()) return 0.0;
  int hits = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const int sign = values[i] > 0 ? 1 : -1;
    if (sign == labels[static_cast<std::size_t>(i)]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(labels.size());
}

RMat qfim(const Circuit& c, const Vec& input) {
  const int L = static_cast<int>(c.layers.size());
  Vec psi = input;
  std::vector<Vec> ds;
  ds.reserve(static_cast<std::size_t>(L));
  Vec hpsi(psi.size());
  for (int mu = 0; mu < L; ++mu) {
    const Layer& l = c.layers[static_cast<std::size_t>(mu)];
    apply_layer_inplace(c.n, l.gen, l.theta, psi);
    for (Vec& d : ds) apply_layer_inplace(c.n, l.gen, l.theta, d);
    repsn::apply_generator(c.n, l.gen, psi, hpsi);
    ds.push_back(hpsi);  // derivative state up to a -i factor
  }
  Vec v(L);
  Mat g(L, L);
  for (int j = 0; j < L; ++j) {
    v[j] = ds[static_cast<std::size_t>(j)].dot(psi);
    for (int k = j; k < L; ++k) {
      g(j, k) = ds[static_cast<std::size_t>(j)].dot(ds[static_cast<std::size_t>(k)]);
      g(k, j) = std::conj(g(j, k));
    }
  }
  return 4.0 * (g - v.conjugate() * v.transpose()).real();
}

int qfim_rank(const RMat& f, double tol) {
  if (f.rows() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<RMat> es(f, Eigen::EigenvaluesOnly);
  const double mx = es.eigenvalues().maxCoeff();
  // A top eigenvalue at tolerance scale is itself numerical noise: without
  // this floor a zero matrix would report the rank of its rounding errors.
  if (mx <= tol) return 0;
  return static_cast<int>((es.eigenvalues().array() > tol * mx).count());
}

OverparamResult find_overparam_depth(int n, const Vec& input, int l_max, Rng& rng) {
  if (l_max < 1) throw ValidationError("find_overparam_depth: l_max must be >= 1");
  const Circuit c = make_cycled_circuit(n, uniform_angles(l_max, rng));
  const RMat f = qfim(c, input);
  OverparamResult res;
  res.ranks.resize(static_cast<std::size_t>(l_max));
  for (int L = 1; L <= l_max; ++L)
    res.ranks[static_cast<std::size_t>(L - 1)] = qfim_rank(f.topLeftCorner(L, L));
  res.rank = res.ranks.back();
  res.l_ovp = l_max;
  for (int L = 1; L <= l_max; ++L) {
    if (res.ranks[static_cast<std::size_t>(L - 1)] == res.rank) {
      res.l_ovp = L;
      break;
    }
  }
  res.saturated = res.l_ovp < l_max;
  return res;
}

}  // namespace eqnn::qsim
