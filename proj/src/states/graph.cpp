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

#include "eqnn/states/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace eqnn::states {

void check_graph(const Graph& g) {
  if (g.n < 1) throw ValidationError("graph: node count must be positive");
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : g.edges) {
    if (a < 0 || b < 0 || a >= g.n || b >= g.n) {
      throw ValidationError("graph: edge endpoint out of range");
    }
    if (a >= b) throw ValidationError("graph: edges must satisfy a < b");
    if (!seen.insert({a, b}).second) throw ValidationError("graph: duplicate edge");
  }
}

Graph erdos_renyi(int n, double p, Rng& rng) {
  if (n < 1) throw ValidationError("erdos_renyi: node count must be positive");
  if (p < 0.0 || p > 1.0) throw ValidationError("erdos_renyi: p must lie in [0, 1]");
  Graph g;
  g.n = n;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng.uniform01() < p) g.edges.emplace_back(a, b);
    }
  }
  return g;
}

Graph k_regular(int n, int k, Rng& rng) {
  if (n < 1) throw ValidationError("k_regular: node count must be positive");
  if (k < 0 || k >= n) throw ValidationError("k_regular: need 0 <= k < n");
  if ((static_cast<std::int64_t>(n) * k) % 2 != 0) {
    throw ValidationError("k_regular: n*k must be even");
  }
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
  for (int attempt = 0; attempt < 10000; ++attempt) {
    stubs.clear();
    for (int v = 0; v < n; ++v) {
      for (int c = 0; c < k; ++c) stubs.push_back(v);
    }
    rng.shuffle(stubs);
    std::set<std::pair<int, int>> edges;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      const int a = std::min(stubs[i], stubs[i + 1]);
      const int b = std::max(stubs[i], stubs[i + 1]);
      if (a == b || !edges.insert({a, b}).second) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Graph g;
      g.n = n;
      g.edges.assign(edges.begin(), edges.end());
      return g;
    }
  }
  throw ValidationError("k_regular: rejection sampling failed");
}

bool is_connected(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& [a, b] : g.edges) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) parent[static_cast<std::size_t>(ra)] = rb;
  }
  const int root = find(0);
  for (int v = 1; v < g.n; ++v) {
    if (find(v) != root) return false;
  }
  return true;
}

Graph relabel(const Graph& g, const repsn::Perm& perm) {
  if (static_cast<int>(perm.size()) != g.n || !repsn::is_perm(perm)) {
    throw ValidationError("relabel: invalid permutation");
  }
  Graph out;
  out.n = g.n;
  out.edges.reserve(g.edges.size());
  for (const auto& [a, b] : g.edges) {
    const int pa = perm[static_cast<std::size_t>(a)];
    const int pb = perm[static_cast<std::size_t>(b)];
    out.edges.emplace_back(std::min(pa, pb), std::max(pa, pb));
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  out << g.n << "\n";
  for (const auto& [a, b] : g.edges) out << a << " " << b << "\n";
  return out.str();
}

Graph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  Graph g;
  if (!(in >> g.n)) throw ValidationError("graph: missing node count");
  int a = 0, b = 0;
  while (in >> a >> b) g.edges.emplace_back(a, b);
  if (!in.eof()) throw ValidationError("graph: malformed edge line");
  std::sort(g.edges.begin(), g.edges.end());
  check_graph(g);
  return g;
}

void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw ValidationError("graph: cannot open " + path + " for writing");
  out << graph_to_text(g);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("graph: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return graph_from_text(buf.str());
}

}  // namespace eqnn::states
