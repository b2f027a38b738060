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

// Dense statevector primitives. Layers generated by the permutation-invariant
// set factorize into commuting terms: the X/Y sums into n single-qubit
// rotations, the ZZ sum into a diagonal phase per Hamming weight, so one layer
// costs O(n 2^n) instead of a dense matrix exponential.

#pragma once

#include <cstdint>

#include "eqnn/common.hpp"
#include "eqnn/repsn/operators.hpp"

namespace eqnn::qsim {

using repsn::Generator;
using repsn::Measurement;

Vec zero_state(int n);
Vec plus_state(int n);
Vec basis_state(int n, std::uint32_t z);

// Throws ValidationError unless psi has dimension 2^n and unit norm to 1e-10.
void check_state(int n, const Vec& psi);

// psi <- exp(-i theta G) psi.
void apply_layer_inplace(int n, Generator g, double theta, Vec& psi);
Vec apply_layer(int n, Generator g, double theta, Vec psi);

double expectation(int n, Measurement o, const Vec& psi);

// Single-qubit helpers used by the hardware-efficient baseline.
void apply_ry(int n, int q, double theta, Vec& psi);
// out = (Y_q / 2) in; the derivative insertion for a Y rotation.
void apply_half_y(int n, int q, const Vec& in, Vec& out);
void apply_cnot(int n, int ctrl, int targ, Vec& psi);

}  // namespace eqnn::qsim
