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

#include "eqnn/variance/analytic.hpp"

#include "eqnn/repsn/irreps.hpp"

namespace eqnn::variance {

double krawtchouk(int k, int w, int n) {
  if (n < 0 || k < 0 || k > n || w < 0 || w > n) {
    throw ValidationError("krawtchouk: indices out of range");
  }
  double sum = 0.0;
  for (int l = 0; l <= k; ++l) {
    if (l > w || k - l > n - w) continue;
    const double term = static_cast<double>(repsn::binomial(n - w, k - l)) *
                        static_cast<double>(repsn::binomial(w, l));
    sum += (l % 2 == 0) ? term : -term;
  }
  return sum;
}

double analytic_delta(OpClass op, int d_lambda, int n, int k_local) {
  if (n < 1) throw ValidationError("analytic_delta: n must be positive");
  // d_lambda = n - 2m + 1 for m in [0, n/2].
  const int two_m = n + 1 - d_lambda;
  if (two_m < 0 || two_m % 2 != 0 || two_m / 2 > n / 2) {
    throw ValidationError("analytic_delta: block dimension invalid for n");
  }
  const int m = two_m / 2;
  const auto d = static_cast<double>(d_lambda);
  switch (op) {
    case OpClass::OneBody:
      return 2.0 * static_cast<double>(repsn::binomial(d_lambda + 1, 3));
    case OpClass::TwoBody:
      return (8.0 / 3.0) * static_cast<double>(repsn::binomial(d_lambda + 2, 5));
    case OpClass::GlobalString:
      return (d * d - 1.0 + static_cast<double>(n % 2)) / d;
    case OpClass::KLocal: {
      if (k_local < 0 || k_local > n) {
        throw ValidationError("analytic_delta: k out of range");
      }
      double sum = 0.0, sum_sq = 0.0;
      for (int w = m; w <= n - m; ++w) {
        const double v = krawtchouk(k_local, w, n);
        sum += v;
        sum_sq += v * v;
      }
      return sum_sq - sum * sum / d;
    }
  }
  throw ValidationError("analytic_delta: unknown operator class");
}

}  // namespace eqnn::variance
