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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cmath>
#include <complex>

#include "eqnn/repsn/irreps.hpp"
#include "eqnn/repsn/operators.hpp"
#include "eqnn/repsn/permutation.hpp"
#include "eqnn/repsn/schur_basis.hpp"
#include "eqnn/repsn/sectors.hpp"
#include "eqnn/repsn/twirl.hpp"

using namespace eqnn;
using namespace eqnn::repsn;

namespace {

Mat random_hermitian(int dim, Rng& rng) {
  Mat a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      a(i, j) = Complex(rng.normal(), rng.normal());
    }
  }
  return 0.5 * (a + a.adjoint()).eval();
}

Vec random_state(int n, Rng& rng) {
  Vec v(1 << n);
  for (int i = 0; i < v.size(); ++i) v[i] = Complex(rng.normal(), rng.normal());
  return v / v.norm();
}

}  // namespace

TEST_CASE("binomial handles exact small values and edge cases") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(14, 7) == 3432);
  CHECK(binomial(7, -1) == 0);
  CHECK(binomial(7, 8) == 0);
  CHECK(binomial(52, 5) == 2598960);
}

TEST_CASE("tetrahedral is C(n+3,3)") {
  CHECK(tetrahedral(1) == 4);
  CHECK(tetrahedral(4) == 35);
  CHECK(tetrahedral(6) == 84);
  CHECK(tetrahedral(7) == 120);
  for (int n = 1; n <= 14; ++n) CHECK(tetrahedral(n) == binomial(n + 3, 3));
}

TEST_CASE("hook_length_dim on two-row shapes") {
  CHECK(hook_length_dim({3}) == 1);
  CHECK(hook_length_dim({4, 1}) == 4);
  CHECK(hook_length_dim({3, 2}) == 5);
  CHECK(hook_length_dim({7, 0}) == 1);
  CHECK_THROWS_AS(hook_length_dim({3, 2, 1}), ValidationError);
  CHECK_THROWS_AS(hook_length_dim({2, 3}), ValidationError);
}

TEST_CASE("two_row_irreps lists blocks by increasing m") {
  const auto one = two_row_irreps(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].dim == 2);
  CHECK(one[0].mult == 1);

  const auto five = two_row_irreps(5);
  REQUIRE(five.size() == 3);
  CHECK(five[0].dim == 6);
  CHECK(five[0].mult == 1);
  CHECK(five[1].dim == 4);
  CHECK(five[1].mult == 4);
  CHECK(five[2].dim == 2);
  CHECK(five[2].mult == 5);

  CHECK_THROWS_AS(two_row_irreps(15), CapacityError);
  CHECK_THROWS_AS(two_row_irreps(0), CapacityError);
}

TEST_CASE("block dimensions satisfy both integer sum rules for n = 1..14") {
  for (int n = 1; n <= 14; ++n) {
    std::uint64_t space = 0;
    std::uint64_t params = 0;
    for (const auto& ir : two_row_irreps(n)) {
      CHECK(ir.dim == n - 2 * ir.m + 1);
      CHECK(static_cast<std::uint64_t>(ir.mult) ==
            binomial(n, ir.m) - binomial(n, ir.m - 1));
      CHECK(static_cast<std::uint64_t>(ir.mult) ==
            hook_length_dim({n - ir.m, ir.m}));
      space += static_cast<std::uint64_t>(ir.mult) * static_cast<std::uint64_t>(ir.dim);
      params += static_cast<std::uint64_t>(ir.dim) * static_cast<std::uint64_t>(ir.dim);
    }
    CHECK(space == (1ull << n));
    CHECK(params == tetrahedral(n));
  }
}

TEST_CASE("weight sectors enumerate bitstrings in increasing index order") {
  WeightSectors sec(4);
  CHECK(sec.states(0) == std::vector<std::uint32_t>{0});
  CHECK(sec.states(2) == std::vector<std::uint32_t>{3, 5, 6, 9, 10, 12});
  CHECK(sec.states(4) == std::vector<std::uint32_t>{15});
  for (std::uint32_t z = 0; z < 16; ++z) {
    CHECK(sec.weight(z) == std::popcount(z));
    CHECK(sec.states(sec.weight(z))[static_cast<std::size_t>(sec.rank(z))] == z);
  }
}

TEST_CASE("wire permutations act on basis indices as a homomorphism") {
  CHECK(permuted_basis_index(2, {1, 0}, 1) == 2);
  CHECK(permuted_basis_index(2, {1, 0}, 2) == 1);
  CHECK(permuted_basis_index(2, {1, 0}, 3) == 3);

  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Perm p = random_perm(5, rng);
    const Perm q = random_perm(5, rng);
    const Perm pq = compose(p, q);
    for (std::uint32_t z = 0; z < 32; ++z) {
      CHECK(permuted_basis_index(5, pq, z) ==
            permuted_basis_index(5, p, permuted_basis_index(5, q, z)));
    }
    const Perm inv = inverse_perm(p);
    for (std::uint32_t z = 0; z < 32; ++z) {
      CHECK(permuted_basis_index(5, inv, permuted_basis_index(5, p, z)) == z);
    }
  }
}

TEST_CASE("permutation matrices represent the group") {
  CHECK(permutation_matrix(3, identity_perm(3)).isIdentity(1e-15));

  const Perm cyc = {1, 2, 0};
  const Eigen::MatrixXd r = permutation_matrix(3, cyc);
  CHECK((r * r * r).isIdentity(1e-15));

  Rng rng(5);
  const Perm p = random_perm(3, rng);
  const Perm q = random_perm(3, rng);
  const Eigen::MatrixXd lhs = permutation_matrix(3, p) * permutation_matrix(3, q);
  CHECK(lhs.isApprox(permutation_matrix(3, compose(p, q)), 1e-15));

  CHECK_THROWS_AS(permutation_matrix(3, Perm{0, 0, 2}), ValidationError);
  CHECK_THROWS_AS(permutation_matrix(3, Perm{0, 1}), ValidationError);
}

TEST_CASE("apply_permutation matches the dense matrix") {
  Rng rng(17);
  for (int n = 2; n <= 6; ++n) {
    const Perm p = random_perm(n, rng);
    const Vec psi = random_state(n, rng);
    Vec out(psi.size());
    apply_permutation(n, p, psi, out);
    const Eigen::MatrixXd r = permutation_matrix(n, p);
    CHECK((out - r * psi).norm() < 1e-12);
  }
}

TEST_CASE("all_perms enumerates n! permutations") {
  CHECK(all_perms(1).size() == 1);
  CHECK(all_perms(4).size() == 24);
  const auto perms = all_perms(3);
  CHECK(perms.front() == Perm{0, 1, 2});
  CHECK(perms.back() == Perm{2, 1, 0});
}

TEST_CASE("generators and measurements commute with every wire permutation") {
  Rng rng(23);
  for (int n = 2; n <= 5; ++n) {
    std::vector<Mat> ops;
    for (const Generator g : {Generator::SumX, Generator::SumY, Generator::SumZZ}) {
      ops.push_back(generator_matrix(n, g));
    }
    for (const Measurement o : {Measurement::SumX, Measurement::SumXX, Measurement::ProdX}) {
      ops.push_back(measurement_matrix(n, o));
    }
    for (int trial = 0; trial < 100; ++trial) {
      const Eigen::MatrixXd r = permutation_matrix(n, random_perm(n, rng));
      for (const Mat& h : ops) {
        CHECK((r * h - h * r).norm() < 1e-10);
      }
    }
  }
}

TEST_CASE("operator applies agree with dense matrices") {
  Rng rng(29);
  for (int n = 2; n <= 5; ++n) {
    const Vec psi = random_state(n, rng);
    Vec out(psi.size());
    for (const Generator g : {Generator::SumX, Generator::SumY, Generator::SumZZ}) {
      apply_generator(n, g, psi, out);
      CHECK((out - generator_matrix(n, g) * psi).norm() < 1e-12);
    }
    for (const Measurement o : {Measurement::SumX, Measurement::SumXX, Measurement::ProdX}) {
      apply_measurement(n, o, psi, out);
      CHECK((out - measurement_matrix(n, o) * psi).norm() < 1e-12);
    }
  }
}

TEST_CASE("measurement operator norms stay at most one") {
  for (int n = 2; n <= 5; ++n) {
    for (const Measurement o : {Measurement::SumX, Measurement::SumXX, Measurement::ProdX}) {
      Eigen::SelfAdjointEigenSolver<Mat> es(measurement_matrix(n, o));
      CHECK(es.eigenvalues().cwiseAbs().maxCoeff() <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("operator names round-trip through the parsers") {
  for (const Generator g : {Generator::SumX, Generator::SumY, Generator::SumZZ}) {
    CHECK(parse_generator(generator_name(g)) == g);
  }
  for (const Measurement o : {Measurement::SumX, Measurement::SumXX, Measurement::ProdX}) {
    CHECK(parse_measurement(measurement_name(o)) == o);
  }
  CHECK_THROWS_AS(parse_generator("sum_q"), ValidationError);
  CHECK_THROWS_AS(parse_measurement("prod_z"), ValidationError);
}

TEST_CASE("diagonal string helpers match popcount formulas") {
  for (int n = 2; n <= 6; ++n) {
    const Eigen::VectorXd one = one_body_z_diag(n);
    const Eigen::VectorXd two = two_body_zz_diag(n);
    const Eigen::VectorXd glob = global_z_string_diag(n);
    for (std::uint32_t z = 0; z < (1u << n); ++z) {
      const int w = std::popcount(z);
      CHECK(one[z] == doctest::Approx(n - 2 * w));
      // sum_{j<k} z_j z_k = ((sum z_j)^2 - n) / 2 with z_j = +/-1.
      CHECK(two[z] == doctest::Approx(((n - 2.0 * w) * (n - 2.0 * w) - n) / 2));
      CHECK(glob[z] == doctest::Approx(w % 2 == 0 ? 1 : -1));
      double elem = 0.0;
      for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (std::popcount(s) == 2) elem += (std::popcount(s & z) % 2 == 0) ? 1 : -1;
      }
      CHECK(k_local_z_diag(n, 2)[z] == doctest::Approx(elem));
    }
    CHECK(k_local_z_diag(n, 1).isApprox(one, 1e-14));
    CHECK(k_local_z_diag(n, n).isApprox(glob, 1e-14));
  }
}

TEST_CASE("schur columns are orthonormal and weight-sparse") {
  for (int n = 1; n <= 6; ++n) {
    const SchurBasis basis(n);
    const Eigen::MatrixXd s = basis.matrix();
    CHECK((s.transpose() * s - Eigen::MatrixXd::Identity(s.cols(), s.cols()))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    CHECK(basis.index_map().size() == (1u << n));

    for (const auto& ix : basis.index_map()) {
      const Eigen::VectorXd col = basis.column(ix.m, ix.nu, ix.k);
      for (std::uint32_t z = 0; z < (1u << n); ++z) {
        if (std::popcount(z) != ix.m + ix.k) CHECK(col[z] == 0.0);
      }
    }
  }
}

TEST_CASE("index_map orders blocks by m then nu then k") {
  const SchurBasis basis(5);
  const auto& map = basis.index_map();
  for (std::size_t i = 1; i < map.size(); ++i) {
    const auto& a = map[i - 1];
    const auto& b = map[i];
    const bool ordered = a.m < b.m || (a.m == b.m && a.nu < b.nu) ||
                         (a.m == b.m && a.nu == b.nu && a.k < b.k);
    CHECK(ordered);
  }
  for (const auto& ir : basis.irreps()) {
    int count = 0;
    for (const auto& ix : map) {
      if (ix.m == ir.m) ++count;
    }
    CHECK(count == ir.dim * ir.mult);
  }
}

TEST_CASE("two-qubit schur basis is the triplet/singlet pair") {
  const SchurBasis basis(2);
  const double r = 1.0 / std::sqrt(2.0);

  const Eigen::VectorXd triplet = basis.column(0, 0, 1);
  CHECK(triplet[1] == doctest::Approx(r));
  CHECK(triplet[2] == doctest::Approx(r));

  const Eigen::VectorXd singlet = basis.column(1, 0, 0);
  CHECK(singlet[1] == doctest::Approx(r));
  CHECK(singlet[2] == doctest::Approx(-r));

  CHECK(basis.column(0, 0, 0)[0] == doctest::Approx(1.0));
  CHECK(basis.column(0, 0, 2)[3] == doctest::Approx(1.0));
}

TEST_CASE("restriction isometries are orthonormal and complete") {
  for (int n = 2; n <= 4; ++n) {
    const SchurBasis basis(n);
    const int dim = 1 << n;
    Eigen::MatrixXd complete = Eigen::MatrixXd::Zero(dim, dim);
    for (const auto& ir : basis.irreps()) {
      for (int nu = 0; nu < ir.mult; ++nu) {
        const Eigen::MatrixXd q = basis.q_matrix(ir.m, nu);
        CHECK((q * q.transpose()).isIdentity(1e-12));
        complete += q.transpose() * q;
        for (int nu2 = 0; nu2 < nu; ++nu2) {
          const Eigen::MatrixXd q2 = basis.q_matrix(ir.m, nu2);
          CHECK((q * q2.transpose()).cwiseAbs().maxCoeff() < 1e-12);
        }
      }
    }
    CHECK(complete.isIdentity(1e-12));
  }
}

TEST_CASE("restrict_dense of the identity is the block identity") {
  for (int n = 2; n <= 5; ++n) {
    const SchurBasis basis(n);
    const int dim = 1 << n;
    const Mat eye = Mat::Identity(dim, dim);
    for (const auto& ir : basis.irreps()) {
      for (int nu = 0; nu < ir.mult; ++nu) {
        CHECK(basis.restrict_dense(eye, ir.m, nu).isIdentity(1e-12));
      }
    }
  }
}

TEST_CASE("restricted equivariant operators are nu-independent") {
  Rng rng(31);
  for (int n = 3; n <= 5; ++n) {
    const SchurBasis basis(n);
    for (const Generator g : {Generator::SumX, Generator::SumY, Generator::SumZZ}) {
      const Mat h = generator_matrix(n, g);
      for (const auto& ir : basis.irreps()) {
        const Mat first = basis.restrict_dense(h, ir.m, 0);
        for (int nu = 1; nu < ir.mult; ++nu) {
          CHECK((basis.restrict_dense(h, ir.m, nu) - first).norm() < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("restriction traces are complete and reject non-Hermitian input") {
  Rng rng(37);
  const int n = 3;
  const SchurBasis basis(n);
  const Mat a = random_hermitian(1 << n, rng);
  Complex total = 0.0;
  for (const auto& ir : basis.irreps()) {
    for (int nu = 0; nu < ir.mult; ++nu) {
      total += basis.restrict_dense(a, ir.m, nu).trace();
    }
  }
  CHECK(std::abs(total - a.trace()) < 1e-10);

  Mat bad = a;
  bad(0, 1) += Complex(0.0, 0.5);
  CHECK_THROWS_AS(basis.restrict_dense(bad, 0, 0), ValidationError);
}

TEST_CASE("restrict_action matches restrict_dense on equivariant operators") {
  for (int n = 2; n <= 6; ++n) {
    const SchurBasis basis(n);
    for (const Generator g : {Generator::SumX, Generator::SumY, Generator::SumZZ}) {
      const Mat dense = generator_matrix(n, g);
      const auto apply = [&](const Vec& in, Vec& out) { apply_generator(n, g, in, out); };
      for (const auto& ir : basis.irreps()) {
        const Mat via_action = basis.restrict_action(ir.m, apply);
        CHECK((via_action - basis.restrict_dense(dense, ir.m, 0)).norm() < 1e-10);
      }
    }
  }
}

TEST_CASE("one-body Z restricts to the n-2w ladder diagonal") {
  for (int n = 2; n <= 6; ++n) {
    const SchurBasis basis(n);
    const auto diag = one_body_z_diag(n);
    const auto apply = [&](const Vec& in, Vec& out) {
      out = diag.cast<Complex>().asDiagonal() * in;
    };
    for (const auto& ir : basis.irreps()) {
      const Mat block = basis.restrict_action(ir.m, apply);
      for (int k = 0; k < ir.dim; ++k) {
        for (int k2 = 0; k2 < ir.dim; ++k2) {
          const double expected = (k == k2) ? n - 2.0 * (ir.m + k) : 0.0;
          CHECK(std::abs(block(k, k2) - expected) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("schur conjugation block-diagonalizes permutations and generators") {
  Rng rng(41);
  for (int n = 3; n <= 5; ++n) {
    const SchurBasis basis(n);
    const Eigen::MatrixXd s = basis.matrix();
    const auto& map = basis.index_map();
    const int dim = 1 << n;

    std::vector<Eigen::MatrixXd> conj;
    for (int trial = 0; trial < 5; ++trial) {
      conj.push_back(s.transpose() * permutation_matrix(n, random_perm(n, rng)) * s);
    }
    // R(pi) mixes nu copies at fixed (m, k); generators mix k at fixed (m, nu).
    for (const auto& mat : conj) {
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
          if (map[i].m == map[j].m && map[i].k == map[j].k) continue;
          CHECK(std::abs(mat(i, j)) < 1e-10);
        }
      }
    }
    for (const Generator g : {Generator::SumX, Generator::SumY, Generator::SumZZ}) {
      const Mat hc = s.cast<Complex>().transpose() * generator_matrix(n, g) * s.cast<Complex>();
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
          if (map[i].m == map[j].m && map[i].nu == map[j].nu) continue;
          CHECK(std::abs(hc(i, j)) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("state_block_sum matches explicit isometry products") {
  Rng rng(43);
  const int n = 3;
  const SchurBasis basis(n);
  const Vec psi = random_state(n, rng);
  double trace_total = 0.0;
  for (const auto& ir : basis.irreps()) {
    Mat expected = Mat::Zero(ir.dim, ir.dim);
    for (int nu = 0; nu < ir.mult; ++nu) {
      const Mat q = basis.q_matrix(ir.m, nu).cast<Complex>();
      const Vec proj = q * psi;
      expected += proj * proj.adjoint();
    }
    const Mat got = basis.state_block_sum(ir.m, psi);
    CHECK((got - expected).norm() < 1e-12);
    trace_total += got.trace().real();
  }
  CHECK(trace_total == doctest::Approx(1.0));
}

TEST_CASE("twirl projects onto the commutant") {
  Rng rng(47);
  for (int n = 2; n <= 4; ++n) {
    const SchurBasis basis(n);
    const Mat a = random_hermitian(1 << n, rng);
    const Mat ta = twirl(basis, a);

    CHECK((twirl(basis, ta) - ta).norm() < 1e-10);
    for (int trial = 0; trial < 20; ++trial) {
      const Eigen::MatrixXd r = permutation_matrix(n, random_perm(n, rng));
      CHECK((r * ta - ta * r).norm() < 1e-10);
    }
    CHECK((twirl(basis, generator_matrix(n, Generator::SumZZ)) -
           generator_matrix(n, Generator::SumZZ))
              .norm() < 1e-10);

    const Mat b = random_hermitian(1 << n, rng);
    const Mat lin = twirl(basis, (0.7 * a + 1.3 * b).eval());
    CHECK((lin - 0.7 * ta - 1.3 * twirl(basis, b)).norm() < 1e-10);
  }
}

TEST_CASE("twirl equals the explicit group average at small n") {
  Rng rng(53);
  for (int n = 2; n <= 4; ++n) {
    const SchurBasis basis(n);
    const Mat a = random_hermitian(1 << n, rng);
    CHECK((twirl(basis, a) - twirl_group_average(n, a)).norm() < 1e-10);
  }
}

TEST_CASE("twirl of a single-site X is the averaged X sum") {
  for (int n = 2; n <= 4; ++n) {
    const SchurBasis basis(n);
    const int dim = 1 << n;
    Mat x0 = Mat::Zero(dim, dim);
    for (std::uint32_t z = 0; z < static_cast<std::uint32_t>(dim); ++z) {
      x0(z ^ qubit_mask(n, 0), z) = 1.0;
    }
    CHECK((twirl(basis, x0) - generator_matrix(n, Generator::SumX)).norm() < 1e-10);
  }
}

TEST_CASE("symmetric projector fixes Dicke states and kills the rest") {
  const int n = 3;
  const Mat p = symmetric_projector(n);
  CHECK((p * p - p).norm() < 1e-12);
  CHECK(p.trace().real() == doctest::Approx(n + 1));

  Vec dicke = Vec::Zero(8);
  dicke[1] = dicke[2] = dicke[4] = 1.0 / std::sqrt(3.0);
  CHECK((p * dicke - dicke).norm() < 1e-12);

  Vec anti = Vec::Zero(8);
  anti[1] = 1.0 / std::sqrt(2.0);
  anti[2] = -1.0 / std::sqrt(2.0);
  CHECK((p * anti).norm() < 1e-12);
}

TEST_CASE("rng streams are deterministic and item-keyed") {
  Rng a(99), b(99);
  for (int i = 0; i < 100; ++i) CHECK(a.raw() == b.raw());

  Rng c = Rng::for_item(7, 0);
  Rng d = Rng::for_item(7, 0);
  Rng e = Rng::for_item(7, 1);
  CHECK(c.raw() == d.raw());
  CHECK(c.raw() != e.raw());

  Rng u(3);
  for (int i = 0; i < 1000; ++i) {
    const double v = u.uniform01();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
}
