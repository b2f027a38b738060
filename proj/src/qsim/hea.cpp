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

#include "eqnn/qsim/hea.hpp"

#include <stdexcept>

#include "eqnn/qsim/statevector.hpp"
#include "eqnn/repsn/sectors.hpp"

namespace eqnn::qsim {

namespace {

void check_params(const HeaCircuit& c, const RVec& params) {
  if (c.n < 2) throw ValidationError("hea: need at least 2 qubits");
  if (params.size() != hea_param_count(c)) {
    throw ValidationError("hea: parameter count mismatch");
  }
}

// O = (X_0 + X_1)/2 applied to psi.
Vec apply_x01(int n, const Vec& psi) {
  const std::int64_t dim = psi.size();
  const std::uint64_t m0 = repsn::qubit_mask(n, 0);
  const std::uint64_t m1 = repsn::qubit_mask(n, 1);
  Vec out = Vec::Zero(dim);
  for (std::int64_t z = 0; z < dim; ++z) {
    const auto u = static_cast<std::uint64_t>(z);
    out[z] = 0.5 * (psi[static_cast<std::int64_t>(u ^ m0)] +
                    psi[static_cast<std::int64_t>(u ^ m1)]);
  }
  return out;
}

void apply_hea_layer(int n, const RVec& params, int layer, Vec& psi) {
  for (int q = 0; q < n; ++q) apply_ry(n, q, params[layer * n + q], psi);
  for (int q = 0; q + 1 < n; ++q) apply_cnot(n, q, q + 1, psi);
}

}  // namespace

Vec hea_apply(const HeaCircuit& c, const RVec& params, Vec psi) {
  check_params(c, params);
  for (int l = 0; l < c.layers; ++l) apply_hea_layer(c.n, params, l, psi);
  return psi;
}

RVec hea_per_state_losses(const HeaCircuit& c, const RVec& params,
                          const std::vector<Vec>& states) {
  check_params(c, params);
  RVec out(static_cast<std::int64_t>(states.size()));
  for (std::size_t i = 0; i < states.size(); ++i) {
    Vec psi = hea_apply(c, params, states[i]);
    out[static_cast<std::int64_t>(i)] = psi.dot(apply_x01(c.n, psi)).real();
  }
  return out;
}

double hea_loss(const HeaCircuit& c, const RVec& params, const LabeledDataset& data) {
  const RVec vals = hea_per_state_losses(c, params, data.states);
  double loss = 0.0;
  for (std::int64_t i = 0; i < vals.size(); ++i) loss += data.weights[i] * vals[i];
  return loss;
}

double hea_loss_and_grad(const HeaCircuit& c, const RVec& params, const LabeledDataset& data,
                         RVec& grad) {
  check_params(c, params);
  grad = RVec::Zero(params.size());
  double loss = 0.0;
  for (std::size_t s = 0; s < data.states.size(); ++s) {
    const double w = data.weights[static_cast<std::int64_t>(s)];
    Vec psi = hea_apply(c, params, data.states[s]);
    Vec q = apply_x01(c.n, psi);
    loss += w * psi.dot(q).real();
    // Walk gates in reverse; at each rotation the pair (psi, q) sits just
    // after that gate, so the derivative insertion is Y_q/2 on psi.
    for (int l = c.layers - 1; l >= 0; --l) {
      for (int qb = c.n - 2; qb >= 0; --qb) {
        apply_cnot(c.n, qb, qb + 1, psi);
        apply_cnot(c.n, qb, qb + 1, q);
      }
      Vec hq(q.size());
      for (int qb = c.n - 1; qb >= 0; --qb) {
        apply_half_y(c.n, qb, q, hq);
        grad[l * c.n + qb] += w * (-2.0) * psi.dot(hq).imag();
        apply_ry(c.n, qb, -params[l * c.n + qb], psi);
        apply_ry(c.n, qb, -params[l * c.n + qb], q);
      }
    }
  }
  return loss;
}

}  // namespace eqnn::qsim
