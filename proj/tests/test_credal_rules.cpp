// Copyright 2026 The tbmq authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tbmq/credal.hpp"
#include "tbmq/fixtures.hpp"
#include "tbmq/transforms.hpp"
#include "test_support.hpp"

using namespace tbmq;

namespace {

// Independent elementwise construction of the elementary conjunctive
// factor: kept deliberately literal as the oracle for the Kronecker
// build in the library.
Matrix conj_elementary_oracle(int n, int element, double alpha) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  const SubsetIndex bit = SubsetIndex{1} << element;
  Matrix k = Matrix::Zero(dim, dim);
  for (SubsetIndex fi = 0; fi < dim; ++fi) {
    for (SubsetIndex fj = 0; fj < dim; ++fj) {
      if (!(fi & bit) && fj == (fi | bit)) {
        k(fi, fj) = 1.0;
      } else if (!(fj & bit) && fi == fj) {
        k(fi, fj) = alpha;
      } else if (!(fj & bit) && fi == (fj | bit)) {
        k(fi, fj) = 1.0 - alpha;
      }
    }
  }
  return k;
}

Matrix disj_elementary_oracle(int n, int element, double alpha) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  const SubsetIndex bit = SubsetIndex{1} << element;
  Matrix k = Matrix::Zero(dim, dim);
  for (SubsetIndex fi = 0; fi < dim; ++fi) {
    for (SubsetIndex fj = 0; fj < dim; ++fj) {
      if (!(fj & bit) && fi == (fj | bit)) {
        k(fi, fj) = 1.0;
      } else if ((fj & bit) && fi == fj) {
        k(fi, fj) = alpha;
      } else if (!(fi & bit) && fj == (fi | bit)) {
        k(fi, fj) = 1.0 - alpha;
      }
    }
  }
  return k;
}

// The elementary factors act on disjoint bit pairs, so they commute;
// folding high element first keeps the floating-point association
// identical to the Kronecker chain and the comparison bit-exact.
Matrix k_conj_oracle(const FrameOfDiscernment& frame, SubsetIndex focal,
                     double alpha) {
  const Eigen::Index dim = frame.subset_count();
  Matrix k = Matrix::Identity(dim, dim);
  for (int j = frame.size() - 1; j >= 0; --j) {
    if (!subset_contains(focal, j)) {
      k = k * conj_elementary_oracle(frame.size(), j, alpha);
    }
  }
  return k;
}

Matrix k_disj_oracle(const FrameOfDiscernment& frame, SubsetIndex focal,
                     double alpha) {
  const Eigen::Index dim = frame.subset_count();
  Matrix k = Matrix::Identity(dim, dim);
  for (int j = frame.size() - 1; j >= 0; --j) {
    if (subset_contains(focal, j)) {
      k = k * disj_elementary_oracle(frame.size(), j, alpha);
    }
  }
  return k;
}

}  // namespace

TEST_CASE("ccr basics") {
  const auto frame = fixtures::frame2();
  const MassFunction m = fixtures::example1_m1();
  CHECK(ccr(m, MassFunction::vacuous(frame)).values() == m.values());

  const auto a = MassFunction::categorical(frame, 0b01);
  const auto b = MassFunction::categorical(frame, 0b11);
  CHECK(ccr(a, b).values() == a.values());

  CHECK_THROWS_AS((void)ccr(m, MassFunction::vacuous(test::test_frame(2))),
                  Error);
}

TEST_CASE("ccr pair enumeration equals commonality product") {
  CHECK(test::max_abs_diff(
            ccr(fixtures::example1_m1(), fixtures::example1_m2()).values(),
            ccr_via_commonality(fixtures::example1_m1(),
                                fixtures::example1_m2())
                .values()) < 1e-12);

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto frame = test::test_frame(n);
    const MassFunction m1 = test::random_sparse_mass(frame, rng);
    const MassFunction m2 = test::random_mass(frame, rng);
    CHECK(test::max_abs_diff(ccr(m1, m2).values(),
                             ccr_via_commonality(m1, m2).values()) < 1e-12);
  }
}

TEST_CASE("dcr basics and implicability product") {
  const auto frame = fixtures::frame2();
  const MassFunction m = fixtures::example1_m1();
  CHECK(dcr(m, MassFunction::categorical(frame, 0)).values() == m.values());

  const auto a = MassFunction::categorical(frame, 0b01);
  const auto b = MassFunction::categorical(frame, 0b10);
  CHECK(dcr(a, b).values() ==
        MassFunction::categorical(frame, 0b11).values());

  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f3 = test::test_frame(3);
    const MassFunction m1 = test::random_mass(f3, rng);
    const MassFunction m2 = test::random_sparse_mass(f3, rng);
    CHECK(test::max_abs_diff(dcr(m1, m2).values(),
                             dcr_via_implicability(m1, m2).values()) < 1e-12);
  }
}

TEST_CASE("exclusive rules") {
  const Vector got =
      cecr(fixtures::example1_m1(), fixtures::example1_m2()).values();
  CHECK(test::max_abs_diff(got, fixtures::example1_result()) < 1e-12);

  const auto frame = fixtures::frame2();
  const MassFunction m = fixtures::example1_m1();
  CHECK(decr(m, MassFunction::categorical(frame, 0)).values() == m.values());

  const auto cat = MassFunction::categorical(frame, 0b10);
  CHECK(decr(cat, cat).values() ==
        MassFunction::categorical(frame, 0).values());
}

TEST_CASE("rules are commutative") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto frame = test::test_frame(n);
    const MassFunction m1 = test::random_mass(frame, rng);
    const MassFunction m2 = test::random_sparse_mass(frame, rng);
    CHECK(test::max_abs_diff(ccr(m1, m2).values(), ccr(m2, m1).values()) <
          1e-12);
    CHECK(test::max_abs_diff(dcr(m1, m2).values(), dcr(m2, m1).values()) <
          1e-12);
    CHECK(test::max_abs_diff(cecr(m1, m2).values(), cecr(m2, m1).values()) <
          1e-12);
    CHECK(test::max_abs_diff(decr(m1, m2).values(), decr(m2, m1).values()) <
          1e-12);
    const double alpha = 0.25 * static_cast<double>(rng() % 5);
    for (auto kind : {AlphaKind::Conjunctive, AlphaKind::Disjunctive}) {
      CHECK(test::max_abs_diff(alpha_junction(m1, m2, alpha, kind).values(),
                               alpha_junction(m2, m1, alpha, kind).values()) <
            1e-12);
    }
  }
}

TEST_CASE("ccr and dcr are associative") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto frame = test::test_frame(n);
    const MassFunction a = test::random_mass(frame, rng);
    const MassFunction b = test::random_mass(frame, rng);
    const MassFunction c = test::random_sparse_mass(frame, rng);
    CHECK(test::max_abs_diff(ccr(ccr(a, b), c).values(),
                             ccr(a, ccr(b, c)).values()) < 1e-10);
    CHECK(test::max_abs_diff(dcr(dcr(a, b), c).values(),
                             dcr(a, dcr(b, c)).values()) < 1e-10);
  }
}

TEST_CASE("bacr degenerates to the named rules") {
  const std::vector<MassFunction> pair{fixtures::example1_m1(),
                                       fixtures::example1_m2()};
  CHECK(test::max_abs_diff(
            bacr(pair, BooleanExpression::parse("x1 & x2")).values(),
            ccr(pair[0], pair[1]).values()) < 1e-12);
  CHECK(test::max_abs_diff(
            bacr(pair, BooleanExpression::parse("x1 | x2")).values(),
            dcr(pair[0], pair[1]).values()) < 1e-12);
  CHECK(test::max_abs_diff(
            bacr(pair, BooleanExpression::parse("(x1 & x2) | (!x1 & !x2)"))
                .values(),
            fixtures::example1_result()) < 1e-12);
  // De Morgan: !(!x1 & !x2) is the disjunction.
  CHECK(test::max_abs_diff(
            bacr(pair, BooleanExpression::parse("!(!x1 & !x2)")).values(),
            dcr(pair[0], pair[1]).values()) < 1e-12);
}

TEST_CASE("bacr equals the exhaustive tuple oracle") {
  std::mt19937_64 rng(25);
  const auto frame = fixtures::frame2();
  const auto expr = BooleanExpression::parse("(x1 & x2) | (x2 & x3)");
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<MassFunction> ms{test::random_mass(frame, rng),
                                       test::random_mass(frame, rng),
                                       test::random_sparse_mass(frame, rng)};
    // All 4^3 = 64 tuples, written out independently of the library's
    // support enumeration.
    Vector expect = Vector::Zero(4);
    for (SubsetIndex a = 0; a < 4; ++a) {
      for (SubsetIndex b = 0; b < 4; ++b) {
        for (SubsetIndex c = 0; c < 4; ++c) {
          const SubsetIndex out = (a & b) | (b & c);
          expect(out) += ms[0](a) * ms[1](b) * ms[2](c);
        }
      }
    }
    CHECK(test::max_abs_diff(bacr(ms, expr).values(), expect) < 1e-12);
  }

  const std::vector<MassFunction> two{fixtures::example1_m1(),
                                      fixtures::example1_m2()};
  CHECK_THROWS_AS((void)bacr(two, expr), Error);  // arity mismatch
}

TEST_CASE("boolean expression parsing and layering") {
  const auto expr = BooleanExpression::parse("(x1 & x2) | (!x1 & !x2)");
  CHECK(expr.num_inputs() == 2);
  CHECK(expr.layer_count() == 2);
  CHECK(expr.layers()[0].size() == 2);  // the two conjunctions
  CHECK(expr.layers()[1].size() == 1);  // the disjunction

  // Chains collapse into one component.
  const auto chain = BooleanExpression::parse("x1 & x2 & x3");
  CHECK(chain.layer_count() == 1);
  CHECK(chain.layers()[0].size() == 1);

  const auto deep = BooleanExpression::parse("((x1 & x2) | x3) & x4");
  CHECK(deep.num_inputs() == 4);
  CHECK(deep.layer_count() == 3);

  // Negation does not add a layer.
  CHECK(BooleanExpression::parse("!(x1 & x2)").layer_count() == 1);

  const SubsetIndex inputs[] = {0b01, 0b11};
  CHECK(BooleanExpression::parse("!x1 | x2").evaluate(inputs, 0b11) == 0b11);

  CHECK_THROWS_AS((void)BooleanExpression::parse("x1 &"), Error);
  CHECK_THROWS_AS((void)BooleanExpression::parse("(x1 | x2"), Error);
  CHECK_THROWS_AS((void)BooleanExpression::parse("y1"), Error);
  CHECK_THROWS_AS((void)BooleanExpression::parse("x0"), Error);
}

TEST_CASE("k-matrix kronecker build equals the elementwise definition") {
  for (int n = 1; n <= 4; ++n) {
    const auto frame = test::test_frame(n);
    for (double alpha : {0.0, 0.3, 0.5, 1.0}) {
      for (SubsetIndex f = 0; f <= frame.full_set(); ++f) {
        CHECK((k_matrix_conj(frame, f, alpha).matrix -
               k_conj_oracle(frame, f, alpha))
                  .cwiseAbs()
                  .maxCoeff() == 0.0);
        CHECK((k_matrix_disj(frame, f, alpha).matrix -
               k_disj_oracle(frame, f, alpha))
                  .cwiseAbs()
                  .maxCoeff() == 0.0);
      }
    }
  }
}

TEST_CASE("k-matrix boundary shapes") {
  const auto frame = test::test_frame(3);
  CHECK(k_matrix_conj(frame, frame.full_set(), 0.7)
            .matrix.isApprox(Matrix::Identity(8, 8)));
  CHECK(k_matrix_disj(frame, 0, 0.7).matrix.isApprox(Matrix::Identity(8, 8)));
}

TEST_CASE("k-matrices are column-stochastic and preserve mass") {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto frame = test::test_frame(n);
    const SubsetIndex f =
        static_cast<SubsetIndex>(rng() % frame.subset_count());
    const double p = 0.25 * static_cast<double>(rng() % 5);
    for (const KMatrix& k :
         {k_matrix_conj(frame, f, p), k_matrix_disj(frame, f, p),
          cer_matrix(frame, f, p), crr_matrix(frame, f, p)}) {
      CHECK(test::max_abs_diff(k.matrix.colwise().sum().transpose(),
                               Vector::Ones(frame.subset_count())) < 1e-12);
      CHECK(k.matrix.minCoeff() >= 0.0);
      const MassFunction m = test::random_mass(frame, rng);
      const MassFunction out = apply_k(k, m);
      CHECK(out.values().sum() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("alpha junction boundaries and the printed reference") {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto frame = test::test_frame(n);
    const MassFunction m1 = test::random_mass(frame, rng);
    const MassFunction m2 = test::random_sparse_mass(frame, rng);
    CHECK(test::max_abs_diff(
              alpha_junction(m1, m2, 1.0, AlphaKind::Conjunctive).values(),
              ccr(m1, m2).values()) < 1e-12);
    CHECK(test::max_abs_diff(
              alpha_junction(m1, m2, 0.0, AlphaKind::Conjunctive).values(),
              cecr(m1, m2).values()) < 1e-12);
    CHECK(test::max_abs_diff(
              alpha_junction(m1, m2, 1.0, AlphaKind::Disjunctive).values(),
              dcr(m1, m2).values()) < 1e-12);
    CHECK(test::max_abs_diff(
              alpha_junction(m1, m2, 0.0, AlphaKind::Disjunctive).values(),
              decr(m1, m2).values()) < 1e-12);
  }

  // The 4-decimal reference vectors for the adjusted copies of the
  // 3-element example mass at alpha = 0.3.
  const MassFunction m = fixtures::example2_m();
  CHECK(test::max_abs_diff(
            alpha_adjusted_vector(m, 0, 0.3, AlphaKind::Conjunctive),
            fixtures::example2_empty_reference()) < 5e-5);
  CHECK(test::max_abs_diff(
            alpha_adjusted_vector(m, 1, 0.3, AlphaKind::Conjunctive),
            fixtures::example2_w1_reference()) < 5e-5);
}

TEST_CASE("alpha-adjusted vectors match the dense k-matrix route") {
  std::mt19937_64 rng(28);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto frame = test::test_frame(n);
    const MassFunction m = test::random_mass(frame, rng);
    const SubsetIndex f =
        static_cast<SubsetIndex>(rng() % frame.subset_count());
    const double alpha = 0.25 * static_cast<double>(rng() % 5);
    CHECK(test::max_abs_diff(
              alpha_adjusted_vector(m, f, alpha, AlphaKind::Conjunctive),
              k_matrix_conj(frame, f, alpha).matrix * m.values()) < 1e-12);
    CHECK(test::max_abs_diff(
              alpha_adjusted_vector(m, f, alpha, AlphaKind::Disjunctive),
              k_matrix_disj(frame, f, alpha).matrix * m.values()) < 1e-12);
  }
}

TEST_CASE("contour revisions") {
  const auto frame = test::test_frame(3);
  std::mt19937_64 rng(29);
  const MassFunction m = test::random_mass(frame, rng);

  SUBCASE("beta = 0 is the identity") {
    CHECK(test::max_abs_diff(cer(m, 0b101, 0.0).values(), m.values()) == 0.0);
    CHECK(test::max_abs_diff(crr(m, 0b101, 0.0).values(), m.values()) == 0.0);
  }

  SUBCASE("full reduction zeroes the contour") {
    const MassFunction out = crr(m, 0b011, 1.0);
    const ContourFunction cf = contour(out);
    CHECK(cf.values(0) == doctest::Approx(0.0));
    CHECK(cf.values(1) == doctest::Approx(0.0));
    CHECK(cf.values(2) == doctest::Approx(contour(m).values(2)));
  }

  SUBCASE("vacuous mass is a fixed point of enhancement") {
    const MassFunction vac = MassFunction::vacuous(frame);
    CHECK(test::max_abs_diff(cer(vac, 0b001, 0.77).values(), vac.values()) <
          1e-15);
    CHECK(test::max_abs_diff(
              apply_k(cer_matrix(frame, 0b001, 0.77), vac).values(),
              vac.values()) < 1e-15);
  }

  SUBCASE("revisions move only the selected contours, monotonically") {
    for (int trial = 0; trial < 20; ++trial) {
      const MassFunction mm = test::random_sparse_mass(frame, rng);
      const SubsetIndex f =
          static_cast<SubsetIndex>(1 + rng() % frame.full_set());
      const double beta = 0.25 * static_cast<double>(1 + rng() % 4);
      const Vector before = contour(mm).values;
      const Vector up = contour(cer(mm, f, beta)).values;
      const Vector down = contour(crr(mm, f, beta)).values;
      for (int j = 0; j < 3; ++j) {
        if (subset_contains(f, j)) {
          CHECK(up(j) >= before(j) - 1e-12);
          CHECK(down(j) <= before(j) + 1e-12);
        } else {
          CHECK(up(j) == doctest::Approx(before(j)).epsilon(1e-12));
          CHECK(down(j) == doctest::Approx(before(j)).epsilon(1e-12));
        }
      }
    }
  }

  SUBCASE("matrix route agrees with the in-place route") {
    for (int trial = 0; trial < 10; ++trial) {
      const MassFunction mm = test::random_mass(frame, rng);
      const SubsetIndex f =
          static_cast<SubsetIndex>(rng() % frame.subset_count());
      const double beta = 0.25 * static_cast<double>(rng() % 5);
      CHECK(test::max_abs_diff(
                cer(mm, f, beta).values(),
                apply_k(cer_matrix(frame, f, beta), mm).values()) < 1e-12);
      CHECK(test::max_abs_diff(
                crr(mm, f, beta).values(),
                apply_k(crr_matrix(frame, f, beta), mm).values()) < 1e-12);
    }
  }

  SUBCASE("parameters outside the unit interval are rejected") {
    CHECK_THROWS_AS((void)cer(m, 1, 1.5), Error);
    CHECK_THROWS_AS((void)alpha_junction(m, m, -0.1, AlphaKind::Conjunctive),
                    Error);
  }
}
