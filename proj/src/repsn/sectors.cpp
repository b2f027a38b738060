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

#include "eqnn/repsn/sectors.hpp"

#include <bit>

#include "eqnn/common.hpp"

namespace eqnn::repsn {

WeightSectors::WeightSectors(int n) : n_(n) {
  if (n < 1 || n > 24) throw CapacityError("WeightSectors: n outside [1, 24]");
  const std::uint32_t dim = 1u << n;
  states_.resize(static_cast<std::size_t>(n) + 1);
  rank_.resize(dim);
  weight_.resize(dim);
  for (std::uint32_t z = 0; z < dim; ++z) {
    int w = std::popcount(z);
    weight_[z] = static_cast<std::uint8_t>(w);
    rank_[z] = static_cast<std::int32_t>(states_[static_cast<std::size_t>(w)].size());
    states_[static_cast<std::size_t>(w)].push_back(z);
  }
}

}  // namespace eqnn::repsn
