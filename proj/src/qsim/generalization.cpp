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

#include "eqnn/qsim/generalization.hpp"

#include <algorithm>
#include <cmath>

#include "eqnn/qsim/block_model.hpp"
#include "eqnn/repsn/irreps.hpp"

namespace eqnn::qsim {

double generalization_bound(int dof, int train_size, double delta) {
  if (train_size < 1) throw ValidationError("generalization: train size must be positive");
  if (delta <= 0.0 || delta >= 1.0) {
    throw ValidationError("generalization: delta must lie in (0, 1)");
  }
  const double m = static_cast<double>(train_size);
  return std::sqrt(static_cast<double>(dof) / m) + std::sqrt(std::log(1.0 / delta) / m);
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw ValidationError("quantile: empty sample");
  if (q < 0.0 || q > 1.0) throw ValidationError("quantile: q must lie in [0, 1]");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= values.size()) return values.back();
  const double frac = pos - static_cast<double>(lo);
  return values[lo] * (1.0 - frac) + values[lo + 1] * frac;
}

GeneralizationReport generalization_experiment(const GeneralizationConfig& cfg,
                                               const DatasetSampler& sampler) {
  if (cfg.n < 2) throw ValidationError("generalization: need at least 2 qubits");
  if (cfg.trials < 1) throw ValidationError("generalization: trials must be positive");

  const int dof = static_cast<int>(repsn::tetrahedral(cfg.n));
  GeneralizationReport report;
  report.n = cfg.n;
  report.train_size = cfg.train_size > 0 ? cfg.train_size : dof;
  report.test_size = cfg.test_size > 0 ? cfg.test_size : 2 * dof;
  report.layers = cfg.layers > 0 ? cfg.layers : dof;
  if (report.train_size < 1) throw ValidationError("generalization: train size must be positive");

  const BlockModel model(cfg.n, cfg.obs);
  const std::vector<Generator> gens = cycle_generators(report.layers);

  std::vector<double> gaps;
  gaps.reserve(static_cast<std::size_t>(cfg.trials));
  double sum = 0.0, sum_sq = 0.0;
  std::int64_t count = 0;

  for (int t = 0; t < cfg.trials; ++t) {
    auto [train_set, test_set] = sampler(static_cast<std::uint64_t>(t));
    check_dataset(cfg.n, train_set);
    check_dataset(cfg.n, test_set);

    // Angle draws tag the item's high bit so a sampler keyed on the plain
    // trial index stays independent of them.
    Rng rng = Rng::for_item(cfg.seed, 0x8000000000000000ull | static_cast<std::uint64_t>(t));
    std::vector<Layer> layers(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
      layers[i] = Layer{gens[i], rng.uniform(-kPi, kPi)};

    double train_loss = 0.0, test_loss = 0.0;
    const RVec train_vals = model.per_state_losses(layers, train_set.states);
    const RVec test_vals = model.per_state_losses(layers, test_set.states);
    for (std::int64_t i = 0; i < train_vals.size(); ++i) {
      train_loss += train_set.weights[i] * train_vals[i];
      sum += train_vals[i];
      sum_sq += train_vals[i] * train_vals[i];
    }
    for (std::int64_t i = 0; i < test_vals.size(); ++i) {
      test_loss += test_set.weights[i] * test_vals[i];
      sum += test_vals[i];
      sum_sq += test_vals[i] * test_vals[i];
    }
    count += train_vals.size() + test_vals.size();
    gaps.push_back(std::abs(test_loss - train_loss));
  }

  const double mean = sum / static_cast<double>(count);
  const double var = std::max(sum_sq / static_cast<double>(count) - mean * mean, 0.0);
  const double sd = std::max(std::sqrt(var), 1e-300);

  report.normalized_errors.reserve(gaps.size());
  for (double g : gaps) report.normalized_errors.push_back(g / sd);
  report.percentile90 = quantile(report.normalized_errors, 0.9);
  report.bound = generalization_bound(dof, report.train_size, cfg.delta);
  return report;
}

}  // namespace eqnn::qsim
