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

// Shared numeric aliases, error taxonomy, and a deterministic RNG wrapper.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace eqnn {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;   // statevectors and block vectors
using Mat = Eigen::MatrixXcd;   // operators
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

inline constexpr double kPi = std::numbers::pi;

// Bad arguments or malformed inputs; the CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested size exceeds a configured cap; the CLI maps this to exit code 3.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// mt19937_64 with fixed (not implementation-defined) output transforms, so
// seeded runs are bit-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Derives an independent stream for item `item` of a run seeded by `seed`;
  // used by Monte Carlo loops so results do not depend on iteration order.
  static Rng for_item(std::uint64_t seed, std::uint64_t item) {
    const std::uint64_t mixed = item ^ 0x9e3779b97f4a7c15ULL;
    std::seed_seq seq{seed, mixed};
    std::mt19937_64 eng(seq);
    Rng r(0);
    r.engine_ = eng;
    return r;
  }

  std::uint64_t raw() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // Standard normal via Box-Muller; spare value cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    while (u == 0.0) u = uniform01();
    double v = uniform01();
    double r = std::sqrt(-2.0 * std::log(u));
    spare_ = r * std::sin(2.0 * kPi * v);
    has_spare_ = true;
    return r * std::cos(2.0 * kPi * v);
  }

  // Uniform integer in [0, hi).
  std::uint64_t below(std::uint64_t hi) {
    std::uint64_t mask = ~0ULL;
    if (hi == 0) throw ValidationError("Rng::below: empty range");
    std::uint64_t limit = mask - mask % hi;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % hi;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
    }
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace eqnn
