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

// Permutation-invariant operators: the generator set driving the circuits,
// the measurement set, and the unnormalized Pauli-Z strings whose block
// variances have closed forms. Dense builders are capped at n <= 10 and meant
// for tests; the apply_* forms act on statevectors at any supported n.

#pragma once

#include <cstdint>
#include <string>

#include "eqnn/common.hpp"

namespace eqnn::repsn {

enum class Generator { SumX, SumY, SumZZ };
enum class Measurement { SumX, SumXX, ProdX };

// Cycle order used when a circuit layer index is mapped to a generator.
inline constexpr Generator kGeneratorCycle[3] = {Generator::SumZZ, Generator::SumX,
                                                 Generator::SumY};

std::string generator_name(Generator g);
std::string measurement_name(Measurement o);
Generator parse_generator(const std::string& name);
Measurement parse_measurement(const std::string& name);

// (1/n) sum_j X_j, (1/n) sum_j Y_j, (2/(n(n-1))) sum_{j<k} Z_j Z_k.
void apply_generator(int n, Generator g, const Vec& in, Vec& out);
// (1/n) sum_j X_j, (2/(n(n-1))) sum_{j<k} X_j X_k, prod_j X_j.
void apply_measurement(int n, Measurement o, const Vec& in, Vec& out);

Mat generator_matrix(int n, Generator g);
Mat measurement_matrix(int n, Measurement o);

// Unnormalized strings; all diagonal in the computational basis.
Eigen::VectorXd one_body_z_diag(int n);        // sum_j Z_j
Eigen::VectorXd two_body_zz_diag(int n);       // sum_{j<k} Z_j Z_k
Eigen::VectorXd global_z_string_diag(int n);   // Z^{tensor n}
Eigen::VectorXd k_local_z_diag(int n, int k);  // sum_{|S|=k} Z_S

// Projector onto the symmetric (m = 0) block.
Mat symmetric_projector(int n);

}  // namespace eqnn::repsn
