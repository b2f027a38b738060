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

#include "eqnn/variance/delta.hpp"

namespace eqnn::variance {

double delta(const Mat& a) { return delta(a, a); }

double delta(const Mat& a, const Mat& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) {
    throw ValidationError("delta: matrices must be square");
  }
  if (a.rows() != b.rows()) throw ValidationError("delta: dimension mismatch");
  const auto dim = static_cast<double>(a.rows());
  const Complex tr_ab = (a * b).trace();
  const Complex tr_a = a.trace();
  const Complex tr_b = b.trace();
  return (tr_ab - tr_a * tr_b / dim).real();
}

}  // namespace eqnn::variance
