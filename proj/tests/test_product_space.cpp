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
#include "tbmq/product_space.hpp"
#include "test_support.hpp"

using namespace tbmq;

TEST_CASE("product frame layout") {
  const ProductFrame pf = fixtures::example3_frame();
  CHECK(pf.joint().size() == 4);
  CHECK(pf.joint().element(0) == "w1*t1");
  CHECK(pf.joint().element(1) == "w1*t2");
  CHECK(pf.joint().element(2) == "w2*t1");
  CHECK(pf.pair_position(1, 1) == 3);

  CHECK(pf.cylinder_left(0b01) == 0b0011);
  CHECK(pf.cylinder_right(0b10) == 0b1010);
  CHECK(pf.project_left(0b0110) == 0b11);   // (w1,t2), (w2,t1)
  CHECK(pf.project_right(0b0110) == 0b11);
  CHECK(pf.balloon(0b01, 0b10) == 0b0111);

  CHECK_THROWS_AS(ProductFrame(test::test_frame(4), test::test_frame(4)),
                  Error);
}

TEST_CASE("marginalization of the reference joint mass") {
  const ProductFrame pf = fixtures::example3_frame();
  const MassFunction joint = fixtures::example3_joint();

  const MassFunction left = marginalize(pf, joint, Side::Left);
  CHECK(left(0b01) == doctest::Approx(0.3));
  CHECK(left(0b11) == doctest::Approx(0.7));
  CHECK(left(0b00) == 0.0);
  CHECK(left(0b10) == 0.0);

  const MassFunction right = marginalize(pf, joint, Side::Right);
  CHECK(right(0b01) == doctest::Approx(0.1));
  CHECK(right(0b10) == doctest::Approx(0.4));
  CHECK(right(0b11) == doctest::Approx(0.5));

  CHECK_THROWS_AS((void)marginalize(pf, fixtures::example1_m1(), Side::Left),
                  Error);
}

TEST_CASE("vacuous extension produces exactly the cylinders") {
  const ProductFrame pf = fixtures::example3_frame();
  const MassFunction m = fixtures::example45_marginal();
  const MassFunction up = vacuous_extend(pf, m);
  CHECK(up(0b0011) == doctest::Approx(0.1));
  CHECK(up(0b1100) == doctest::Approx(0.4));
  CHECK(up(0b1111) == doctest::Approx(0.5));

  // Focal sets may only be full cylinders.
  for (SubsetIndex g : up.focal_sets()) {
    CHECK(pf.cylinder_left(pf.project_left(g)) == g);
  }

  const MassFunction vac = MassFunction::vacuous(pf.left());
  CHECK(vacuous_extend(pf, vac).values() ==
        MassFunction::vacuous(pf.joint()).values());
}

TEST_CASE("ballooning extension of the conditional fixture") {
  const ProductFrame pf = fixtures::example3_frame();
  const MassFunction m = fixtures::example45_marginal();
  const SubsetIndex given = pf.right().subset_from_key("t2");
  const MassFunction up = ballooning_extend(pf, m, given);
  CHECK(up(0b0111) == doctest::Approx(0.1));  // {w1}xH plus Omega x {t1}
  CHECK(up(0b1101) == doctest::Approx(0.4));
  CHECK(up(0b1111) == doctest::Approx(0.5));

  CHECK_THROWS_AS((void)ballooning_extend(pf, m, 0), Error);

  // Conditioning on the whole frame makes ballooning vacuous extension.
  CHECK(ballooning_extend(pf, m, pf.right().full_set()).values() ==
        vacuous_extend(pf, m).values());
}

TEST_CASE("conditioning basics") {
  const ProductFrame pf = fixtures::example3_frame();
  const MassFunction joint = fixtures::example3_joint();

  // No information stays no information.
  const MassFunction vac = MassFunction::vacuous(pf.joint());
  CHECK(conditioning(pf, vac, 0b01).values() ==
        MassFunction::vacuous(pf.left()).values());

  // Conditioning on the whole right frame is plain marginalization.
  CHECK(test::max_abs_diff(
            conditioning(pf, joint, pf.right().full_set()).values(),
            marginalize(pf, joint, Side::Left).values()) < 1e-12);

  // Composition oracle: combine with the categorical window, project.
  const MassFunction window =
      MassFunction::categorical(pf.joint(), pf.cylinder_right(0b01));
  const MassFunction expect = marginalize(pf, ccr(joint, window), Side::Left);
  CHECK(conditioning(pf, joint, 0b01).values() == expect.values());

  CHECK_THROWS_AS((void)conditioning(pf, joint, 0), Error);
}

TEST_CASE("extension/projection roundtrips are exact") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int no = 1 + static_cast<int>(rng() % 3);
    const int nt = 1 + static_cast<int>(rng() % 3);
    const ProductFrame pf(test::test_frame(no, "w"), test::test_frame(nt, "t"));
    const MassFunction m = trial % 2
                               ? test::random_mass(pf.left(), rng)
                               : test::random_sparse_mass(pf.left(), rng);

    CHECK(marginalize(pf, vacuous_extend(pf, m), Side::Left).values() ==
          m.values());

    const SubsetIndex given =
        static_cast<SubsetIndex>(1 + rng() % pf.right().full_set());
    CHECK(conditioning(pf, ballooning_extend(pf, m, given), given).values() ==
          m.values());
  }
}

TEST_CASE("product operations conserve mass") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const ProductFrame pf(test::test_frame(2, "w"), test::test_frame(3, "t"));
    const MassFunction joint = test::random_mass(pf.joint(), rng);
    CHECK(marginalize(pf, joint, Side::Left).values().sum() ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(marginalize(pf, joint, Side::Right).values().sum() ==
          doctest::Approx(1.0).epsilon(1e-12));
    const SubsetIndex given =
        static_cast<SubsetIndex>(1 + rng() % pf.right().full_set());
    CHECK(conditioning(pf, joint, given).values().sum() ==
          doctest::Approx(1.0).epsilon(1e-12));

    const MassFunction m = test::random_mass(pf.left(), rng);
    CHECK(vacuous_extend(pf, m).values().sum() ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ballooning_extend(pf, m, given).values().sum() ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}
