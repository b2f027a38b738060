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

// Hamming-weight sector enumeration. Sectors are listed in increasing basis
// index, which is colexicographic order on the sets of set-bit positions.
// Qubit 0 is the most significant bit throughout.

#pragma once

#include <cstdint>
#include <vector>

namespace eqnn::repsn {

class WeightSectors {
 public:
  explicit WeightSectors(int n);

  int n() const { return n_; }

  // Basis indices of weight w, increasing.
  const std::vector<std::uint32_t>& states(int w) const { return states_[static_cast<std::size_t>(w)]; }

  // Position of basis index z within its weight sector.
  std::int32_t rank(std::uint32_t z) const { return rank_[z]; }

  int weight(std::uint32_t z) const { return weight_[z]; }

 private:
  int n_;
  std::vector<std::vector<std::uint32_t>> states_;
  std::vector<std::int32_t> rank_;
  std::vector<std::uint8_t> weight_;
};

inline std::uint32_t qubit_mask(int n, int q) { return 1u << (n - 1 - q); }

}  // namespace eqnn::repsn
