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

// Input-state generators: graph states, product and dense Haar states,
// hardware-efficient circuit states, symmetric-subspace states, and
// fixed-Hamming-weight feature encodings.

#pragma once

#include <string>

#include "eqnn/common.hpp"
#include "eqnn/states/graph.hpp"

namespace eqnn::states {

// Amplitude 2^{-n/2} exp(i*phi*[z_a=z_b=1 count over edges]) on string z.
// phi = pi gives exact +-2^{-n/2} signs.
Vec graph_state(const Graph& g, double phi = kPi);

// Product of independent single-qubit Haar states.
Vec local_haar(int n, Rng& rng);

// Normalized dense complex Gaussian vector; distribution is Haar-invariant.
Vec global_haar(int n, Rng& rng);

// L layers, each one Y-rotation angle applied to every qubit followed by a
// line of CNOTs, starting from |0...0>. One angle per layer keeps the
// rotation half of each layer permutation-symmetric.
Vec hea_state(int n, int layers, Rng& rng);
Vec hea_state_with_angles(int n, int layers, const RVec& angles);

// Random state supported evenly across Hamming-weight sectors: amplitude
// c_w / sqrt(C(n,w)) on every weight-w string.
Vec symmetric_random(int n, Rng& rng);

// Amplitudes x on the weight-k strings in increasing-bitmask order, zero
// elsewhere. Requires len(x) = C(n,k) and unit norm.
Vec hamming_encode(const RVec& x, int k, int n);
Vec hamming_random(int n, int k, Rng& rng);

enum class FamilyTag {
  Symmetric,
  Hamming,
  LocalHaar,
  GlobalHaar,
  HeaFixed,
  HeaLinear,
  GraphER,
  GraphERConnected,
  GraphERDisconnected,
  GraphRegular,
};

struct StateFamilySpec {
  FamilyTag tag = FamilyTag::GraphER;
  int k = 1;             // hamming weight
  int depth = 15;        // fixed hea depth
  int depth_factor = 3;  // linear hea depth multiplier
  int degree = 3;        // regular-graph degree
  double p = 0.4;        // edge probability
  double phi = kPi;      // graph-state phase
};

// Names carry the shape parameter: symmetric, hamming1, local_haar,
// global_haar, hea15, hea3n, er0.4, connected_er, disconnected_er, 3regular.
std::string family_name(const StateFamilySpec& spec);
StateFamilySpec parse_family(const std::string& name);

// Regular-graph degree is bumped by one when n*degree is odd, keeping the
// family defined at every n.
Vec sample_state(const StateFamilySpec& spec, int n, Rng& rng);

}  // namespace eqnn::states
