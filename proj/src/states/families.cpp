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

#include "eqnn/states/families.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "eqnn/qsim/statevector.hpp"
#include "eqnn/repsn/irreps.hpp"
#include "eqnn/repsn/sectors.hpp"

namespace eqnn::states {

Vec graph_state(const Graph& g, double phi) {
  check_graph(g);
  const int n = g.n;
  const std::int64_t dim = std::int64_t{1} << n;
  std::vector<std::uint64_t> masks;
  masks.reserve(g.edges.size());
  for (const auto& [a, b] : g.edges) {
    masks.push_back(repsn::qubit_mask(n, a) | repsn::qubit_mask(n, b));
  }
  const double scale = std::pow(2.0, -0.5 * n);
  Vec psi(dim);
  const bool exact_signs = (phi == kPi);
  for (std::int64_t z = 0; z < dim; ++z) {
    const auto u = static_cast<std::uint64_t>(z);
    int count = 0;
    for (const std::uint64_t m : masks) count += ((u & m) == m) ? 1 : 0;
    if (exact_signs) {
      psi[z] = (count % 2 == 0) ? scale : -scale;
    } else {
      psi[z] = std::polar(scale, phi * count);
    }
  }
  return psi;
}

Vec local_haar(int n, Rng& rng) {
  if (n < 1) throw ValidationError("local_haar: need at least 1 qubit");
  if (n > 20) throw CapacityError("local_haar: n > 20");
  Vec psi = Vec::Ones(1);
  for (int q = 0; q < n; ++q) {
    Vec v(2);
    v[0] = Complex(rng.normal(), rng.normal());
    v[1] = Complex(rng.normal(), rng.normal());
    v /= v.norm();
    Vec next(psi.size() * 2);
    for (std::int64_t z = 0; z < psi.size(); ++z) {
      next[2 * z] = psi[z] * v[0];
      next[2 * z + 1] = psi[z] * v[1];
    }
    psi = std::move(next);
  }
  return psi;
}

Vec global_haar(int n, Rng& rng) {
  if (n < 1) throw ValidationError("global_haar: need at least 1 qubit");
  if (n > 12) throw CapacityError("global_haar: n > 12");
  const std::int64_t dim = std::int64_t{1} << n;
  Vec psi(dim);
  for (std::int64_t z = 0; z < dim; ++z) psi[z] = Complex(rng.normal(), rng.normal());
  psi /= psi.norm();
  return psi;
}

Vec hea_state_with_angles(int n, int layers, const RVec& angles) {
  if (n < 1) throw ValidationError("hea_state: need at least 1 qubit");
  if (layers < 0) throw ValidationError("hea_state: negative depth");
  if (angles.size() != layers) {
    throw ValidationError("hea_state: angle count mismatch");
  }
  Vec psi = qsim::zero_state(n);
  for (int l = 0; l < layers; ++l) {
    for (int q = 0; q < n; ++q) qsim::apply_ry(n, q, angles[l], psi);
    for (int q = 0; q + 1 < n; ++q) qsim::apply_cnot(n, q, q + 1, psi);
  }
  return psi;
}

Vec hea_state(int n, int layers, Rng& rng) {
  RVec angles(layers);
  for (int l = 0; l < layers; ++l) angles[l] = rng.uniform(-kPi, kPi);
  return hea_state_with_angles(n, layers, angles);
}

Vec symmetric_random(int n, Rng& rng) {
  if (n < 1) throw ValidationError("symmetric_random: need at least 1 qubit");
  if (n > 20) throw CapacityError("symmetric_random: n > 20");
  Vec c(n + 1);
  for (int w = 0; w <= n; ++w) c[w] = Complex(rng.normal(), rng.normal());
  c /= c.norm();
  const std::int64_t dim = std::int64_t{1} << n;
  Vec psi(dim);
  for (std::int64_t z = 0; z < dim; ++z) {
    const int w = std::popcount(static_cast<std::uint64_t>(z));
    psi[z] = c[w] / std::sqrt(static_cast<double>(repsn::binomial(n, w)));
  }
  return psi;
}

Vec hamming_encode(const RVec& x, int k, int n) {
  if (n < 1) throw ValidationError("hamming_encode: need at least 1 qubit");
  if (k < 0 || k > n) throw ValidationError("hamming_encode: weight out of range");
  const auto want = static_cast<std::int64_t>(repsn::binomial(n, k));
  if (x.size() != want) throw ValidationError("hamming_encode: feature length mismatch");
  if (std::abs(x.norm() - 1.0) > 1e-10) {
    throw ValidationError("hamming_encode: features must be unit norm");
  }
  const repsn::WeightSectors sectors(n);
  const auto& strings = sectors.states(k);
  Vec psi = Vec::Zero(std::int64_t{1} << n);
  for (std::size_t i = 0; i < strings.size(); ++i) {
    psi[static_cast<std::int64_t>(strings[i])] = x[static_cast<std::int64_t>(i)];
  }
  return psi;
}

Vec hamming_random(int n, int k, Rng& rng) {
  const auto count = static_cast<std::int64_t>(repsn::binomial(n, k));
  RVec x(count);
  for (std::int64_t i = 0; i < count; ++i) x[i] = rng.normal();
  x /= x.norm();
  return hamming_encode(x, k, n);
}

namespace {

std::string format_p(double p) {
  std::ostringstream out;
  out << p;
  return out.str();
}

Vec er_state_conditioned(int n, double p, double phi, bool want_connected, Rng& rng) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Graph g = erdos_renyi(n, p, rng);
    if (is_connected(g) == want_connected) return graph_state(g, phi);
  }
  throw ValidationError("sample_state: conditioned graph sampling starved");
}

}  // namespace

std::string family_name(const StateFamilySpec& spec) {
  switch (spec.tag) {
    case FamilyTag::Symmetric:
      return "symmetric";
    case FamilyTag::Hamming:
      return "hamming" + std::to_string(spec.k);
    case FamilyTag::LocalHaar:
      return "local_haar";
    case FamilyTag::GlobalHaar:
      return "global_haar";
    case FamilyTag::HeaFixed:
      return "hea" + std::to_string(spec.depth);
    case FamilyTag::HeaLinear:
      return "hea" + std::to_string(spec.depth_factor) + "n";
    case FamilyTag::GraphER:
      return "er" + format_p(spec.p);
    case FamilyTag::GraphERConnected:
      return "connected_er";
    case FamilyTag::GraphERDisconnected:
      return "disconnected_er";
    case FamilyTag::GraphRegular:
      return std::to_string(spec.degree) + "regular";
  }
  throw ValidationError("family_name: unknown tag");
}

StateFamilySpec parse_family(const std::string& name) {
  StateFamilySpec spec;
  auto parse_int = [&](const std::string& s, int fallback) {
    if (s.empty()) return fallback;
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw ValidationError("parse_family: bad number in " + name);
      return v;
    } catch (const ValidationError&) {
      throw;
    } catch (...) {
      throw ValidationError("parse_family: bad number in " + name);
    }
  };
  if (name == "symmetric") {
    spec.tag = FamilyTag::Symmetric;
  } else if (name.rfind("hamming", 0) == 0) {
    spec.tag = FamilyTag::Hamming;
    spec.k = parse_int(name.substr(7), 1);
  } else if (name == "local_haar") {
    spec.tag = FamilyTag::LocalHaar;
  } else if (name == "global_haar") {
    spec.tag = FamilyTag::GlobalHaar;
  } else if (name == "connected_er") {
    spec.tag = FamilyTag::GraphERConnected;
  } else if (name == "disconnected_er") {
    spec.tag = FamilyTag::GraphERDisconnected;
  } else if (name.rfind("hea", 0) == 0) {
    const std::string rest = name.substr(3);
    if (!rest.empty() && rest.back() == 'n') {
      spec.tag = FamilyTag::HeaLinear;
      spec.depth_factor = parse_int(rest.substr(0, rest.size() - 1), 3);
    } else {
      spec.tag = FamilyTag::HeaFixed;
      spec.depth = parse_int(rest, 15);
    }
  } else if (name.size() >= 7 && name.substr(name.size() - 7) == "regular") {
    spec.tag = FamilyTag::GraphRegular;
    spec.degree = parse_int(name.substr(0, name.size() - 7), 3);
  } else if (name.rfind("er", 0) == 0) {
    spec.tag = FamilyTag::GraphER;
    const std::string rest = name.substr(2);
    if (!rest.empty()) {
      try {
        std::size_t used = 0;
        spec.p = std::stod(rest, &used);
        if (used != rest.size()) throw ValidationError("parse_family: bad number in " + name);
      } catch (const ValidationError&) {
        throw;
      } catch (...) {
        throw ValidationError("parse_family: bad number in " + name);
      }
    }
  } else {
    throw ValidationError("parse_family: unknown family " + name);
  }
  return spec;
}

Vec sample_state(const StateFamilySpec& spec, int n, Rng& rng) {
  switch (spec.tag) {
    case FamilyTag::Symmetric:
      return symmetric_random(n, rng);
    case FamilyTag::Hamming:
      return hamming_random(n, spec.k, rng);
    case FamilyTag::LocalHaar:
      return local_haar(n, rng);
    case FamilyTag::GlobalHaar:
      return global_haar(n, rng);
    case FamilyTag::HeaFixed:
      return hea_state(n, spec.depth, rng);
    case FamilyTag::HeaLinear:
      return hea_state(n, spec.depth_factor * n, rng);
    case FamilyTag::GraphER:
      return graph_state(erdos_renyi(n, spec.p, rng), spec.phi);
    case FamilyTag::GraphERConnected:
      return er_state_conditioned(n, spec.p, spec.phi, true, rng);
    case FamilyTag::GraphERDisconnected:
      return er_state_conditioned(n, spec.p, spec.phi, false, rng);
    case FamilyTag::GraphRegular: {
      int degree = spec.degree;
      if ((static_cast<std::int64_t>(n) * degree) % 2 != 0) degree += 1;
      return graph_state(k_regular(n, degree, rng), spec.phi);
    }
  }
  throw ValidationError("sample_state: unknown tag");
}

}  // namespace eqnn::states
