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

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace eqnn::harness {

// Doubles print with enough digits to round-trip.
std::string csv_num(double v);
std::string csv_num(int v);
std::string csv_num(std::int64_t v);
std::string csv_num(std::uint64_t v);

void csv_row(std::ostream& out, const std::vector<std::string>& cells);

}  // namespace eqnn::harness
