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

#include <functional>

#include "tbmq/fixtures.hpp"
#include "tbmq/transforms.hpp"
#include "test_support.hpp"

using namespace tbmq;

namespace {

bool throws_code(ErrorCode code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("frame validates labels") {
  CHECK(throws_code(ErrorCode::InvalidArgument, [] {
    FrameOfDiscernment({"a", "a"});
  }));
  CHECK(throws_code(ErrorCode::InvalidArgument, [] {
    FrameOfDiscernment({""});
  }));
  CHECK(throws_code(ErrorCode::InvalidArgument, [] {
    FrameOfDiscernment({"a,b"});
  }));
  const FrameOfDiscernment frame({"w1", "w2", "w3"});
  CHECK(frame.subset_count() == 8);
  CHECK(frame.index_of("w3") == 2);
  CHECK(throws_code(ErrorCode::UnknownElement,
                    [&] { (void)frame.index_of("nope"); }));
}

TEST_CASE("subset keys round-trip through labels") {
  const FrameOfDiscernment frame({"w1", "w2", "w3"});
  CHECK(frame.subset_from_key("") == 0);
  CHECK(frame.subset_from_key("w1,w3") == 0b101);
  CHECK(frame.subset_key(0b101) == "w1,w3");
  CHECK(frame.subset_key(0) == "");
  CHECK(throws_code(ErrorCode::UnknownElement,
                    [&] { frame.subset_from_key("w1,zz"); }));
}

TEST_CASE("make_mass validates and densifies") {
  const FrameOfDiscernment frame({"w1", "w2"});

  const MassFunction vac = make_mass(frame, {{0b11, 1.0}});
  Vector expect(4);
  expect << 0, 0, 0, 1;
  CHECK(vac.values() == expect);

  const MassFunction m =
      make_mass(frame, {{0, 0.2}, {1, 0.1}, {2, 0.4}, {3, 0.3}});
  CHECK(m.values()(0) == 0.2);
  CHECK(m.values()(3) == 0.3);

  CHECK(throws_code(ErrorCode::SumNotOne,
                    [&] { make_mass(frame, {{3, 0.5}}); }));
  CHECK(throws_code(ErrorCode::NegativeMass, [&] {
    make_mass(frame, {{3, 1.4}, {1, -0.4}});
  }));
  CHECK(throws_code(ErrorCode::InvalidArgument,
                    [&] { make_mass(frame, {{9, 1.0}}); }));
}

TEST_CASE("belief transform on the running example") {
  const MassFunction m = fixtures::example1_m1();  // [0.2 0.1 0.4 0.3]
  const BeliefVector bel = to_bel(m);
  CHECK(bel.values(0) == doctest::Approx(0.0));
  CHECK(bel.values(3) == doctest::Approx(0.8));  // 0.1 + 0.4 + 0.3

  const MassFunction vac = MassFunction::vacuous(fixtures::frame2());
  Vector expect(4);
  expect << 0, 0, 0, 1;
  CHECK(test::max_abs_diff(to_bel(vac).values, expect) == 0.0);
}

TEST_CASE("commonality and implicability identities") {
  const MassFunction m = fixtures::example1_m1();
  const CommonalityVector q = to_q(m);
  CHECK(q.values(0) == doctest::Approx(1.0));  // q(empty) = total mass

  const MassFunction vac = MassFunction::vacuous(fixtures::frame2());
  CHECK(to_q(vac).values.minCoeff() == doctest::Approx(1.0));

  // b = Bel + m(empty) everywhere except the empty set's Bel(empty)=0.
  const ImplicabilityVector b = to_b(m);
  const BeliefVector bel = to_bel(m);
  for (int i = 1; i < 4; ++i) {
    CHECK(b.values(i) - bel.values(i) == doctest::Approx(0.2));
  }
  CHECK(b.values(3) == doctest::Approx(1.0));
}

TEST_CASE("mobius roundtrips on random masses") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto frame = test::test_frame(n);
    const MassFunction m = trial % 2 ? test::random_mass(frame, rng)
                                     : test::random_sparse_mass(frame, rng);
    CHECK(test::max_abs_diff(bel_to_mass(to_bel(m)).values(), m.values()) <
          1e-10);
    CHECK(test::max_abs_diff(b_to_mass(to_b(m)).values(), m.values()) < 1e-10);
    CHECK(test::max_abs_diff(q_to_mass(to_q(m)).values(), m.values()) < 1e-10);
    CHECK(test::max_abs_diff(pl_to_mass(to_pl(m)).values(), m.values()) <
          1e-10);
  }
}

TEST_CASE("duality between plausibility and implicability") {
  // Pl(F) = 1 - b(~F) holds for any mass function; the textbook form
  // Pl(F) = 1 - Bel(~F) needs m(empty) = 0, so check both regimes.
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto frame = test::test_frame(n);
    const MassFunction m = test::random_mass(frame, rng);
    const auto pl = to_pl(m);
    const auto b = to_b(m);
    const auto bel = to_bel(m);
    const SubsetIndex full = frame.full_set();
    for (SubsetIndex f = 0; f <= full; ++f) {
      CHECK(pl.values(f) ==
            doctest::Approx(1.0 - b.values(full ^ f)).epsilon(1e-12));
    }
    CHECK(pl.values(0) == doctest::Approx(0.0));

    // Closed-world variant: renormalize the empty set away first.
    Vector closed = m.values();
    closed(0) = 0.0;
    closed /= closed.sum();
    const MassFunction mc(frame, closed);
    const auto plc = to_pl(mc);
    const auto belc = to_bel(mc);
    for (SubsetIndex f = 0; f <= full; ++f) {
      CHECK(plc.values(f) ==
            doctest::Approx(1.0 - belc.values(full ^ f)).epsilon(1e-12));
    }
  }
}

TEST_CASE("belief monotone, commonality antitone") {
  std::mt19937_64 rng(13);
  const auto frame = test::test_frame(4);
  const MassFunction m = test::random_mass(frame, rng);
  const auto bel = to_bel(m);
  const auto q = to_q(m);
  for (SubsetIndex f = 0; f <= frame.full_set(); ++f) {
    for (SubsetIndex g = 0; g <= frame.full_set(); ++g) {
      if (!is_subset_of(f, g)) continue;
      CHECK(bel.values(f) <= bel.values(g) + 1e-12);
      CHECK(q.values(f) >= q.values(g) - 1e-12);
    }
  }
}

TEST_CASE("belief superadditivity, pairwise and three-way") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const auto frame = test::test_frame(3);
    const MassFunction m = test::random_sparse_mass(frame, rng);
    const auto bel = to_bel(m);
    const SubsetIndex full = frame.full_set();
    for (SubsetIndex a = 0; a <= full; ++a) {
      for (SubsetIndex b = 0; b <= full; ++b) {
        CHECK(bel.values(a | b) >=
              bel.values(a) + bel.values(b) - bel.values(a & b) - 1e-12);
        for (SubsetIndex c = 0; c <= full; ++c) {
          const double lhs = bel.values(a | b | c);
          const double rhs = bel.values(a) + bel.values(b) + bel.values(c) -
                             bel.values(a & b) - bel.values(a & c) -
                             bel.values(b & c) + bel.values(a & b & c);
          CHECK(lhs >= rhs - 1e-12);
        }
      }
    }
  }
}

TEST_CASE("transform matrices agree with the summation path") {
  const FrameOfDiscernment one({"w1"});
  Matrix m2b = m2b_matrix(one);
  Matrix m2q = m2q_matrix(one);
  CHECK(m2b(0, 0) == 1.0);
  CHECK(m2b(0, 1) == 0.0);
  CHECK(m2b(1, 0) == 1.0);
  CHECK(m2b(1, 1) == 1.0);
  CHECK(m2q(0, 0) == 1.0);
  CHECK(m2q(0, 1) == 1.0);
  CHECK(m2q(1, 0) == 0.0);
  CHECK(m2q(1, 1) == 1.0);

  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const auto frame = test::test_frame(3);
    const MassFunction m = test::random_mass(frame, rng);
    CHECK(test::max_abs_diff(m2b_matrix(frame) * m.values(),
                             to_b(m).values) < 1e-12);
    CHECK(test::max_abs_diff(m2q_matrix(frame) * m.values(),
                             to_q(m).values) < 1e-12);
  }

  CHECK_THROWS_AS((void)m2b_matrix(test::test_frame(13)), Error);
}

TEST_CASE("pignistic transform") {
  const auto frame2 = fixtures::frame2();
  const Vector uniform = betp(MassFunction::vacuous(frame2));
  CHECK(uniform(0) == doctest::Approx(0.5));
  CHECK(uniform(1) == doctest::Approx(0.5));

  const Vector p = betp(fixtures::example1_m1());
  CHECK(p(0) == doctest::Approx(0.3125));  // (0.1 + 0.15) / 0.8
  CHECK(p(1) == doctest::Approx(0.6875));
  CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-10));

  CHECK_THROWS_AS((void)betp(MassFunction::categorical(frame2, 0)), Error);
}

TEST_CASE("contour and plausibility transform") {
  const auto frame2 = fixtures::frame2();
  CHECK(contour(MassFunction::vacuous(frame2)).values.minCoeff() ==
        doctest::Approx(1.0));
  CHECK(contour(MassFunction::categorical(frame2, 0)).values.maxCoeff() ==
        0.0);

  const ContourFunction pl = contour(fixtures::example1_m1());
  CHECK(pl.values(0) == doctest::Approx(0.4));
  CHECK(pl.values(1) == doctest::Approx(0.7));

  const Vector plp = pl_transform(fixtures::example1_m1());
  CHECK(plp(0) == doctest::Approx(4.0 / 11.0));
  CHECK(plp(1) == doctest::Approx(7.0 / 11.0));

  const Vector plp3 = pl_transform(MassFunction::vacuous(test::test_frame(3)));
  CHECK(plp3(2) == doctest::Approx(1.0 / 3.0));

  const Vector cat = pl_transform(MassFunction::categorical(frame2, 0b01));
  CHECK(cat(0) == doctest::Approx(1.0));
  CHECK(cat(1) == doctest::Approx(0.0));

  CHECK_THROWS_AS((void)pl_transform(MassFunction::categorical(frame2, 0)),
                  Error);
}

TEST_CASE("contour equals singleton plausibilities") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const auto frame = test::test_frame(n);
    const MassFunction m = test::random_sparse_mass(frame, rng);
    const auto pl = to_pl(m);
    const auto cf = contour(m);
    for (int j = 0; j < n; ++j) {
      CHECK(cf.values(j) ==
            doctest::Approx(pl.values(SubsetIndex{1} << j)).epsilon(1e-12));
    }
  }
}

TEST_CASE("pignistic-level outputs are probability distributions") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const MassFunction m = test::random_mass(test::test_frame(n), rng);
    for (const Vector& p : {betp(m), pl_transform(m)}) {
      CHECK(p.minCoeff() >= 0.0);
      CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("plausibility transform is argmax-stable on categorical masses") {
  const auto frame = test::test_frame(3);
  for (SubsetIndex f = 1; f <= frame.full_set(); ++f) {
    const Vector p = pl_transform(MassFunction::categorical(frame, f));
    for (int j = 0; j < 3; ++j) {
      if (subset_contains(f, j)) {
        CHECK(p(j) == doctest::Approx(1.0 / subset_cardinality(f)));
      } else {
        CHECK(p(j) == 0.0);
      }
    }
  }
}
