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

#include "eqnn/variance/classify.hpp"

#include <cmath>

#include <Eigen/QR>

#include "eqnn/variance/delta.hpp"

namespace eqnn::variance {

std::string trainability_name(Trainability t) {
  switch (t) {
    case Trainability::Trainable:
      return "Trainable";
    case Trainability::Untrainable:
      return "Untrainable";
    case Trainability::Inconclusive:
      return "Inconclusive";
  }
  throw ValidationError("trainability_name: unknown value");
}

double max_block_delta(const repsn::SchurBasis& basis, const Vec& psi) {
  double best = 0.0;
  const int blocks = static_cast<int>(basis.irreps().size());
  for (int m = 0; m < blocks; ++m) {
    best = std::max(best, delta(basis.state_block_sum(m, psi)));
  }
  return best;
}

namespace {

struct Fit {
  double aic = 0.0;
  double slope = 0.0;
};

Fit ols_aic(const RMat& x, const RVec& y) {
  const RVec beta = x.colPivHouseholderQr().solve(y);
  const double rss = (y - x * beta).squaredNorm();
  const auto count = static_cast<double>(y.size());
  Fit fit;
  fit.aic = count * std::log(rss / count + 1e-300) + 4.0;
  fit.slope = beta[1];
  return fit;
}

}  // namespace

TrainabilityReport classify_trainability(const std::vector<int>& ns,
                                         const std::vector<double>& ds) {
  if (ns.size() != ds.size()) throw ValidationError("classify: ns/deltas length mismatch");
  if (ns.size() < 4) throw ValidationError("classify: need at least 4 sizes");

  TrainabilityReport report;
  report.ns = ns;
  report.mean_deltas = ds;

  const auto count = static_cast<std::int64_t>(ns.size());
  RVec y(count);
  RMat x_poly(count, 2), x_exp(count, 2);
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (ds[idx] <= 0.0) report.degenerate = true;
    y[i] = std::log(std::max(ds[idx], 1e-300));
    const auto nd = static_cast<double>(ns[idx]);
    x_poly(i, 0) = 1.0;
    x_poly(i, 1) = std::log(nd);
    x_exp(i, 0) = 1.0;
    x_exp(i, 1) = -nd;
  }

  const Fit poly = ols_aic(x_poly, y);
  const Fit exp = ols_aic(x_exp, y);
  report.aic_poly = poly.aic;
  report.aic_exp = exp.aic;
  report.d_aic = exp.aic - poly.aic;
  report.poly_slope = poly.slope;
  report.exp_rate = exp.slope;

  if (report.degenerate) {
    report.verdict = Trainability::Untrainable;
  } else if (report.d_aic > 2.0) {
    report.verdict = Trainability::Trainable;
  } else if (report.d_aic < -2.0) {
    report.verdict = Trainability::Untrainable;
  } else {
    report.verdict = Trainability::Inconclusive;
  }
  return report;
}

TrainabilityReport classify_family(const states::StateFamilySpec& spec,
                                   const std::vector<int>& ns, int draws, std::uint64_t seed) {
  if (draws < 1) throw ValidationError("classify_family: draws must be positive");
  std::vector<double> means;
  means.reserve(ns.size());
  for (const int n : ns) {
    const repsn::SchurBasis basis(n);
    double acc = 0.0;
    for (int j = 0; j < draws; ++j) {
      const std::uint64_t key = static_cast<std::uint64_t>(n) * 1000003ull +
                                static_cast<std::uint64_t>(j);
      Rng rng = Rng::for_item(seed, key);
      acc += max_block_delta(basis, states::sample_state(spec, n, rng));
    }
    means.push_back(acc / draws);
  }
  return classify_trainability(ns, means);
}

}  // namespace eqnn::variance
