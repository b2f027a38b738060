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

#pragma once

#include "eqnn/common.hpp"

namespace eqnn::variance {

// delta(A) = Tr[A^2] - Tr[A]^2/dim: dim times the eigenvalue variance of a
// Hermitian matrix. Nonnegative for Hermitian input.
double delta(const Mat& a);

// Bilinear form delta(A, B) = Tr[AB] - Tr[A]Tr[B]/dim.
double delta(const Mat& a, const Mat& b);

}  // namespace eqnn::variance
