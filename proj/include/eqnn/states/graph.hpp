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

#include <string>
#include <utility>
#include <vector>

#include "eqnn/common.hpp"
#include "eqnn/repsn/permutation.hpp"

namespace eqnn::states {

// Simple undirected graph; edges kept sorted with a < b, no loops or
// duplicates.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

void check_graph(const Graph& g);

Graph erdos_renyi(int n, double p, Rng& rng);

// Pairing model with rejection of loops and multi-edges.
Graph k_regular(int n, int k, Rng& rng);

bool is_connected(const Graph& g);

// Node a becomes node perm[a].
Graph relabel(const Graph& g, const repsn::Perm& perm);

// Text format: first line "n", then one "a b" edge per line, 0-indexed.
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);
void save_graph(const std::string& path, const Graph& g);
Graph load_graph(const std::string& path);

}  // namespace eqnn::states
