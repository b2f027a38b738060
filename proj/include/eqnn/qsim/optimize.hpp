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

// Limited-memory quasi-Newton minimizer with a strong-Wolfe line search, plus
// a first-order adaptive fallback. Non-finite values stop the run with a
// status instead of propagating.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "eqnn/common.hpp"

namespace eqnn::qsim {

// Evaluates f(x) and writes the gradient into the second argument.
using Objective = std::function<double(const RVec&, RVec&)>;

struct OptimizeConfig {
  int max_iter = 10000;
  double grad_tol = 1e-8;    // stop when gradient infinity norm drops below
  double f_tol = 1e-14;      // relative objective-decrease stop
  int memory = 10;
  int max_line_iter = 50;
  double c1 = 1e-4;
  double c2 = 0.9;
};

struct OptimizeResult {
  RVec x;
  double f = 0.0;
  RVec grad;
  std::vector<double> trace;  // best objective seen after each iteration
  int iterations = 0;
  int evaluations = 0;
  std::string status;  // converged | f_converged | max_iter | line_search | diverged
};

OptimizeResult minimize(const Objective& fg, RVec x0, const OptimizeConfig& cfg = {});

OptimizeResult minimize_adam(const Objective& fg, RVec x0, int iters, double lr = 0.05);

}  // namespace eqnn::qsim
