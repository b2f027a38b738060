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

#include "eqnn/variance/empirical.hpp"

#include <algorithm>
#include <cmath>

namespace eqnn::variance {

EmpiricalEstimate sample_stats(const std::vector<double>& values) {
  const auto count = static_cast<std::int64_t>(values.size());
  if (count < 2) throw ValidationError("sample_stats: need at least 2 values");
  double s1 = 0.0, s2 = 0.0;
  for (const double v : values) {
    s1 += v;
    s2 += v * v;
  }
  const auto nd = static_cast<double>(count);
  EmpiricalEstimate est;
  est.samples = static_cast<int>(count);
  est.mean = s1 / nd;
  est.variance = std::max((s2 - s1 * s1 / nd) / (nd - 1.0), 0.0);
  est.mean_stderr = std::sqrt(est.variance / nd);

  // Jackknife over leave-one-out variances; each follows from (s1, s2, v_i).
  const double loo = nd - 1.0;
  double jsum = 0.0, jsq = 0.0;
  for (const double v : values) {
    const double r1 = s1 - v;
    const double r2 = s2 - v * v;
    const double vi = loo > 1.0 ? std::max((r2 - r1 * r1 / loo) / (loo - 1.0), 0.0) : 0.0;
    jsum += vi;
    jsq += vi * vi;
  }
  const double jmean = jsum / nd;
  est.variance_stderr = std::sqrt(std::max(loo / nd * (jsq - nd * jmean * jmean), 0.0));
  return est;
}

std::vector<int> middle_positions(int layers) {
  if (layers < 3) throw ValidationError("middle_positions: need at least 3 layers");
  int start = 3 * ((layers / 2) / 3);
  start = std::min(start, layers - 3);
  return {start, start + 1, start + 2};
}

std::vector<EmpiricalEstimate> empirical_gradient_stats(
    const qsim::BlockModel& model, int layers, const std::vector<int>& positions,
    const qsim::LabeledDataset& data, int samples, std::uint64_t seed) {
  if (samples < 100) throw ValidationError("empirical_gradient_stats: need >= 100 samples");
  if (layers < 1) throw ValidationError("empirical_gradient_stats: need >= 1 layer");
  for (const int p : positions) {
    if (p < 0 || p >= layers) {
      throw ValidationError("empirical_gradient_stats: position out of range");
    }
  }
  qsim::check_dataset(model.n(), data);

  const auto sbar = model.compile(data.states, data.weights);
  const std::vector<qsim::Generator> gens = qsim::cycle_generators(layers);
  std::vector<std::vector<double>> draws(positions.size());
  for (auto& d : draws) d.reserve(static_cast<std::size_t>(samples));

  std::vector<qsim::Layer> circ(gens.size());
  RVec grad;
  for (int s = 0; s < samples; ++s) {
    Rng rng = Rng::for_item(seed, static_cast<std::uint64_t>(s));
    for (std::size_t i = 0; i < gens.size(); ++i) {
      circ[i] = qsim::Layer{gens[i], rng.uniform(-kPi, kPi)};
    }
    model.loss_and_grad(circ, sbar, grad);
    for (std::size_t p = 0; p < positions.size(); ++p) {
      draws[p].push_back(grad[positions[p]]);
    }
  }

  std::vector<EmpiricalEstimate> out;
  out.reserve(positions.size());
  for (const auto& d : draws) out.push_back(sample_stats(d));
  return out;
}

EmpiricalEstimate empirical_variance(const qsim::BlockModel& model, int layers, int position,
                                     const qsim::LabeledDataset& data, int samples,
                                     std::uint64_t seed) {
  return empirical_gradient_stats(model, layers, {position}, data, samples, seed)[0];
}

}  // namespace eqnn::variance
