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

#include "eqnn/variance/predict.hpp"

#include <cmath>

#include "eqnn/variance/analytic.hpp"
#include "eqnn/variance/delta.hpp"

namespace eqnn::variance {

double generator_block_delta(qsim::Generator gen, int d_lambda, int n) {
  switch (gen) {
    case qsim::Generator::SumX:
    case qsim::Generator::SumY: {
      const double s = 1.0 / n;
      return s * s * analytic_delta(OpClass::OneBody, d_lambda, n);
    }
    case qsim::Generator::SumZZ: {
      if (n < 2) throw ValidationError("generator_block_delta: need n >= 2");
      const double s = 2.0 / (static_cast<double>(n) * (n - 1));
      return s * s * analytic_delta(OpClass::TwoBody, d_lambda, n);
    }
  }
  throw ValidationError("generator_block_delta: unknown generator");
}

double observable_block_delta(qsim::Measurement obs, int d_lambda, int n) {
  switch (obs) {
    case qsim::Measurement::SumX: {
      const double s = 1.0 / n;
      return s * s * analytic_delta(OpClass::OneBody, d_lambda, n);
    }
    case qsim::Measurement::SumXX: {
      if (n < 2) throw ValidationError("observable_block_delta: need n >= 2");
      const double s = 2.0 / (static_cast<double>(n) * (n - 1));
      return s * s * analytic_delta(OpClass::TwoBody, d_lambda, n);
    }
    case qsim::Measurement::ProdX:
      return analytic_delta(OpClass::GlobalString, d_lambda, n);
  }
  throw ValidationError("observable_block_delta: unknown observable");
}

std::vector<Mat> sigma_block_sums(const repsn::SchurBasis& basis,
                                  const std::vector<Vec>& states,
                                  const std::vector<double>& weights) {
  if (states.size() != weights.size()) {
    throw ValidationError("sigma_block_sums: states/weights length mismatch");
  }
  const auto& irreps = basis.irreps();
  std::vector<Mat> blocks(irreps.size());
  for (std::size_t b = 0; b < irreps.size(); ++b) {
    blocks[b] = Mat::Zero(irreps[b].dim, irreps[b].dim);
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].size() != (std::int64_t{1} << basis.n())) {
      throw ValidationError("sigma_block_sums: state dimension mismatch");
    }
    for (std::size_t b = 0; b < irreps.size(); ++b) {
      blocks[b] += weights[i] * basis.state_block_sum(static_cast<int>(b), states[i]);
    }
  }
  return blocks;
}

VarianceReport predicted_variance(qsim::Generator gen, qsim::Measurement obs,
                                  const std::vector<Mat>& sigma_blocks,
                                  const repsn::SchurBasis& basis) {
  const auto& irreps = basis.irreps();
  if (sigma_blocks.size() != irreps.size()) {
    throw ValidationError("predicted_variance: block count mismatch");
  }
  VarianceReport report;
  report.n = basis.n();
  report.gen = gen;
  report.obs = obs;
  report.total = 0.0;
  for (std::size_t b = 0; b < irreps.size(); ++b) {
    const auto& ir = irreps[b];
    if (sigma_blocks[b].rows() != ir.dim || sigma_blocks[b].cols() != ir.dim) {
      throw ValidationError("predicted_variance: sigma block dimension mismatch");
    }
    BlockContribution rec;
    rec.irrep = ir;
    if (ir.dim == 1) {
      rec.prefactor = 0.0;
      rec.delta_h = 0.0;
      rec.delta_o = observable_block_delta(obs, ir.dim, ir.n);
      rec.delta_sigma = delta(sigma_blocks[b]);
      rec.contribution = 0.0;
    } else {
      const auto d = static_cast<double>(ir.dim);
      const double denom = (d * d - 1.0) * (d * d - 1.0);
      rec.prefactor = 2.0 * d / denom;
      rec.delta_h = generator_block_delta(gen, ir.dim, ir.n);
      rec.delta_o = observable_block_delta(obs, ir.dim, ir.n);
      rec.delta_sigma = delta(sigma_blocks[b]);
      rec.contribution = rec.prefactor * rec.delta_h * rec.delta_o * rec.delta_sigma;
    }
    report.total += rec.contribution;
    report.blocks.push_back(rec);
  }
  return report;
}

VarianceReport predicted_variance(qsim::Generator gen, qsim::Measurement obs,
                                  const std::vector<Vec>& states,
                                  const std::vector<double>& weights,
                                  const repsn::SchurBasis& basis) {
  return predicted_variance(gen, obs, sigma_block_sums(basis, states, weights), basis);
}

double haar_expected_delta(int n, int m) {
  const auto irreps = repsn::two_row_irreps(n);
  if (m < 0 || m >= static_cast<int>(irreps.size())) {
    throw ValidationError("haar_expected_delta: invalid block index");
  }
  const auto& ir = irreps[static_cast<std::size_t>(m)];
  const auto d = static_cast<double>(std::int64_t{1} << n);
  const auto dl = static_cast<double>(ir.dim);
  return static_cast<double>(ir.mult) * (dl * dl - 1.0) / (d * (d + 1.0));
}

double ensemble_delta_bound(const std::vector<Vec>& states, const std::vector<double>& weights,
                            int m, const repsn::SchurBasis& basis) {
  if (states.size() != weights.size()) {
    throw ValidationError("ensemble_delta_bound: states/weights length mismatch");
  }
  double bound = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const double d = delta(basis.state_block_sum(m, states[i]));
    bound += std::abs(weights[i]) * std::sqrt(std::max(d, 0.0));
  }
  return bound * bound;
}

}  // namespace eqnn::variance
