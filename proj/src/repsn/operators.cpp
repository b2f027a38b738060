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

#include "eqnn/repsn/operators.hpp"

#include <bit>

#include "eqnn/repsn/irreps.hpp"
#include "eqnn/repsn/schur_basis.hpp"
#include "eqnn/repsn/sectors.hpp"

namespace eqnn::repsn {
namespace {

int weight(std::uint32_t z) { return std::popcount(z); }

// sum_{j<k} Z_j Z_k on |z>: same-bit pairs minus opposite-bit pairs.
double zz_pairs(int n, std::uint32_t z) {
  const double w = weight(z);
  return 0.5 * (w * (w - 1) + (n - w) * (n - w - 1)) - w * (n - w);
}

}  // namespace

std::string generator_name(Generator g) {
  switch (g) {
    case Generator::SumX: return "sum_x";
    case Generator::SumY: return "sum_y";
    case Generator::SumZZ: return "sum_zz";
  }
  throw ValidationError("generator_name: unknown generator");
}

std::string measurement_name(Measurement o) {
  switch (o) {
    case Measurement::SumX: return "sum_x";
    case Measurement::SumXX: return "sum_xx";
    case Measurement::ProdX: return "prod_x";
  }
  throw ValidationError("measurement_name: unknown measurement");
}

Generator parse_generator(const std::string& name) {
  if (name == "sum_x") return Generator::SumX;
  if (name == "sum_y") return Generator::SumY;
  if (name == "sum_zz") return Generator::SumZZ;
  throw ValidationError("parse_generator: unknown generator '" + name + "'");
}

Measurement parse_measurement(const std::string& name) {
  if (name == "sum_x") return Measurement::SumX;
  if (name == "sum_xx") return Measurement::SumXX;
  if (name == "prod_x") return Measurement::ProdX;
  throw ValidationError("parse_measurement: unknown measurement '" + name + "'");
}

void apply_generator(int n, Generator g, const Vec& in, Vec& out) {
  const std::uint32_t d = 1u << n;
  out.setZero(d);
  switch (g) {
    case Generator::SumX: {
      const double s = 1.0 / n;
      for (std::uint32_t z = 0; z < d; ++z) {
        Complex acc = 0.0;
        for (int j = 0; j < n; ++j) acc += in[z ^ qubit_mask(n, j)];
        out[z] = s * acc;
      }
      break;
    }
    case Generator::SumY: {
      const double s = 1.0 / n;
      for (std::uint32_t z = 0; z < d; ++z) {
        Complex acc = 0.0;
        for (int j = 0; j < n; ++j) {
          const std::uint32_t mask = qubit_mask(n, j);
          const Complex phase = (z & mask) ? Complex(0, 1) : Complex(0, -1);
          acc += phase * in[z ^ mask];
        }
        out[z] = s * acc;
      }
      break;
    }
    case Generator::SumZZ: {
      const double s = 2.0 / (static_cast<double>(n) * (n - 1));
      for (std::uint32_t z = 0; z < d; ++z) out[z] = s * zz_pairs(n, z) * in[z];
      break;
    }
  }
}

void apply_measurement(int n, Measurement o, const Vec& in, Vec& out) {
  const std::uint32_t d = 1u << n;
  switch (o) {
    case Measurement::SumX:
      apply_generator(n, Generator::SumX, in, out);
      break;
    case Measurement::SumXX: {
      out.setZero(d);
      const double s = 2.0 / (static_cast<double>(n) * (n - 1));
      for (std::uint32_t z = 0; z < d; ++z) {
        Complex acc = 0.0;
        for (int j = 0; j < n; ++j)
          for (int k = j + 1; k < n; ++k)
            acc += in[z ^ qubit_mask(n, j) ^ qubit_mask(n, k)];
        out[z] = s * acc;
      }
      break;
    }
    case Measurement::ProdX: {
      out.resize(d);
      for (std::uint32_t z = 0; z < d; ++z) out[z] = in[z ^ (d - 1)];
      break;
    }
  }
}

Mat generator_matrix(int n, Generator g) {
  if (n > 10) throw CapacityError("generator_matrix: capped at n <= 10");
  const std::uint32_t d = 1u << n;
  Mat out(d, d);
  Vec e = Vec::Zero(d), col(d);
  for (std::uint32_t z = 0; z < d; ++z) {
    e[z] = 1.0;
    apply_generator(n, g, e, col);
    out.col(z) = col;
    e[z] = 0.0;
  }
  return out;
}

Mat measurement_matrix(int n, Measurement o) {
  if (n > 10) throw CapacityError("measurement_matrix: capped at n <= 10");
  const std::uint32_t d = 1u << n;
  Mat out(d, d);
  Vec e = Vec::Zero(d), col(d);
  for (std::uint32_t z = 0; z < d; ++z) {
    e[z] = 1.0;
    apply_measurement(n, o, e, col);
    out.col(z) = col;
    e[z] = 0.0;
  }
  return out;
}

Eigen::VectorXd one_body_z_diag(int n) {
  const std::uint32_t d = 1u << n;
  Eigen::VectorXd out(d);
  for (std::uint32_t z = 0; z < d; ++z) out[z] = n - 2 * weight(z);
  return out;
}

Eigen::VectorXd two_body_zz_diag(int n) {
  const std::uint32_t d = 1u << n;
  Eigen::VectorXd out(d);
  for (std::uint32_t z = 0; z < d; ++z) out[z] = zz_pairs(n, z);
  return out;
}

Eigen::VectorXd global_z_string_diag(int n) {
  const std::uint32_t d = 1u << n;
  Eigen::VectorXd out(d);
  for (std::uint32_t z = 0; z < d; ++z) out[z] = (weight(z) % 2 == 0) ? 1.0 : -1.0;
  return out;
}

Eigen::VectorXd k_local_z_diag(int n, int k) {
  if (k < 1 || k > n) throw ValidationError("k_local_z_diag: k outside [1, n]");
  const std::uint32_t d = 1u << n;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(d);
  // Enumerate supports S of size k (Gosper's hack) and add (-1)^{|S & z|}.
  std::uint32_t s = (1u << k) - 1;
  while (s < d) {
    for (std::uint32_t z = 0; z < d; ++z)
      out[z] += (std::popcount(s & z) % 2 == 0) ? 1.0 : -1.0;
    const std::uint32_t c = s & (~s + 1);
    const std::uint32_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

Mat symmetric_projector(int n) {
  if (n > 10) throw CapacityError("symmetric_projector: capped at n <= 10");
  const SchurBasis basis(n);
  const std::uint32_t d = 1u << n;
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(d, d);
  for (int k = 0; k <= n; ++k) {
    const Eigen::VectorXd c = basis.column(0, 0, k);
    acc.noalias() += c * c.transpose();
  }
  return acc;
}

}  // namespace eqnn::repsn
