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

#include "eqnn/states/dataset.hpp"

#include <cstdint>
#include <fstream>

#include "eqnn/states/families.hpp"

namespace eqnn::states {

qsim::LabeledDataset classification_dataset(int n, int m, double p, double phi, Rng& rng) {
  if (m < 2 || m % 2 != 0) throw ValidationError("classification_dataset: M must be even");
  const int per_bin = m / 2;
  qsim::LabeledDataset data;
  int connected_count = 0, disconnected_count = 0;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    if (connected_count == per_bin && disconnected_count == per_bin) break;
    Graph g = erdos_renyi(n, p, rng);
    const bool conn = is_connected(g);
    int& count = conn ? connected_count : disconnected_count;
    if (count == per_bin) continue;
    ++count;
    data.states.push_back(graph_state(g, phi));
    data.labels.push_back(conn ? 1 : -1);
  }
  if (connected_count != per_bin || disconnected_count != per_bin) {
    throw ValidationError("classification_dataset: bin starvation, p too extreme");
  }
  data.weights.resize(data.labels.size());
  for (std::size_t i = 0; i < data.labels.size(); ++i) {
    data.weights[i] = -static_cast<double>(data.labels[i]) / m;
  }
  return data;
}

void save_state(const std::string& path, int n, const Vec& psi) {
  qsim::check_state(n, psi);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("save_state: cannot open " + path);
  const auto header = static_cast<std::uint64_t>(n);
  out.write(reinterpret_cast<const char*>(&header), sizeof(header));
  for (std::int64_t z = 0; z < psi.size(); ++z) {
    const double re = psi[z].real(), im = psi[z].imag();
    out.write(reinterpret_cast<const char*>(&re), sizeof(re));
    out.write(reinterpret_cast<const char*>(&im), sizeof(im));
  }
  if (!out) throw ValidationError("save_state: write failed for " + path);
}

std::pair<int, Vec> load_state(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("load_state: cannot open " + path);
  std::uint64_t header = 0;
  in.read(reinterpret_cast<char*>(&header), sizeof(header));
  if (!in || header > 30) throw ValidationError("load_state: bad header in " + path);
  const int n = static_cast<int>(header);
  const std::int64_t dim = std::int64_t{1} << n;
  Vec psi(dim);
  for (std::int64_t z = 0; z < dim; ++z) {
    double re = 0.0, im = 0.0;
    in.read(reinterpret_cast<char*>(&re), sizeof(re));
    in.read(reinterpret_cast<char*>(&im), sizeof(im));
    psi[z] = Complex(re, im);
  }
  if (!in) throw ValidationError("load_state: truncated file " + path);
  return {n, psi};
}

}  // namespace eqnn::states
