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

#include "eqnn/qsim/statevector.hpp"

#include <bit>
#include <cmath>

#include "eqnn/repsn/sectors.hpp"

namespace eqnn::qsim {
namespace {

using repsn::qubit_mask;

// ZZ-sum eigenvalue on a weight-w string, with the 2/(n(n-1)) normalization.
double zz_eig(int n, int w) {
  const double t = n - 2.0 * w;
  return (t * t - n) / (static_cast<double>(n) * (n - 1));
}

}  // namespace

Vec zero_state(int n) {
  Vec psi = Vec::Zero(1u << n);
  psi[0] = 1.0;
  return psi;
}

Vec plus_state(int n) {
  const std::uint32_t d = 1u << n;
  return Vec::Constant(d, Complex(1.0 / std::sqrt(static_cast<double>(d)), 0.0));
}

Vec basis_state(int n, std::uint32_t z) {
  Vec psi = Vec::Zero(1u << n);
  psi[z] = 1.0;
  return psi;
}

void check_state(int n, const Vec& psi) {
  if (psi.size() != static_cast<Eigen::Index>(1u << n))
    throw ValidationError("state dimension does not match qubit count");
  if (std::abs(psi.norm() - 1.0) > 1e-10) throw ValidationError("state is not normalized");
}

void apply_layer_inplace(int n, Generator g, double theta, Vec& psi) {
  const std::uint32_t d = 1u << n;
  switch (g) {
    case Generator::SumZZ: {
      if (n < 2) throw ValidationError("sum_zz needs n >= 2");
      for (std::uint32_t z = 0; z < d; ++z) {
        const double e = zz_eig(n, std::popcount(z));
        psi[z] *= Complex(std::cos(theta * e), -std::sin(theta * e));
      }
      break;
    }
    case Generator::SumX: {
      const double a = theta / n;
      const double c = std::cos(a);
      const Complex ms(0.0, -std::sin(a));
      for (int q = 0; q < n; ++q) {
        const std::uint32_t mask = qubit_mask(n, q);
        for (std::uint32_t z = 0; z < d; ++z) {
          if (z & mask) continue;
          const Complex x = psi[z], y = psi[z | mask];
          psi[z] = c * x + ms * y;
          psi[z | mask] = ms * x + c * y;
        }
      }
      break;
    }
    case Generator::SumY: {
      const double a = theta / n;
      const double c = std::cos(a), s = std::sin(a);
      for (int q = 0; q < n; ++q) {
        const std::uint32_t mask = qubit_mask(n, q);
        for (std::uint32_t z = 0; z < d; ++z) {
          if (z & mask) continue;
          const Complex x = psi[z], y = psi[z | mask];
          psi[z] = c * x - s * y;
          psi[z | mask] = s * x + c * y;
        }
      }
      break;
    }
  }
}

Vec apply_layer(int n, Generator g, double theta, Vec psi) {
  apply_layer_inplace(n, g, theta, psi);
  return psi;
}

double expectation(int n, Measurement o, const Vec& psi) {
  Vec acted(psi.size());
  repsn::apply_measurement(n, o, psi, acted);
  return psi.dot(acted).real();
}

void apply_ry(int n, int q, double theta, Vec& psi) {
  const std::uint32_t d = 1u << n;
  const std::uint32_t mask = qubit_mask(n, q);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  for (std::uint32_t z = 0; z < d; ++z) {
    if (z & mask) continue;
    const Complex x = psi[z], y = psi[z | mask];
    psi[z] = c * x - s * y;
    psi[z | mask] = s * x + c * y;
  }
}

void apply_half_y(int n, int q, const Vec& in, Vec& out) {
  const std::uint32_t d = 1u << n;
  const std::uint32_t mask = qubit_mask(n, q);
  out.resize(d);
  const Complex hi(0.0, 0.5);
  for (std::uint32_t z = 0; z < d; ++z) {
    if (z & mask) continue;
    out[z] = -hi * in[z | mask];
    out[z | mask] = hi * in[z];
  }
}

void apply_cnot(int n, int ctrl, int targ, Vec& psi) {
  const std::uint32_t d = 1u << n;
  const std::uint32_t cm = qubit_mask(n, ctrl), tm = qubit_mask(n, targ);
  for (std::uint32_t z = 0; z < d; ++z)
    if ((z & cm) && !(z & tm)) std::swap(psi[z], psi[z | tm]);
}

}  // namespace eqnn::qsim
