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

#include "tbmq/fixtures.hpp"

namespace tbmq::fixtures {

namespace {

MassFunction from_values(const FrameOfDiscernment& frame,
                         std::initializer_list<double> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return MassFunction(frame, std::move(v));
}

}  // namespace

FrameOfDiscernment frame2() { return FrameOfDiscernment({"w1", "w2"}); }

FrameOfDiscernment frame3() { return FrameOfDiscernment({"w1", "w2", "w3"}); }

MassFunction example1_m1() {
  return from_values(frame2(), {0.2, 0.1, 0.4, 0.3});
}

MassFunction example1_m2() {
  return from_values(frame2(), {0.05, 0.13, 0.02, 0.8});
}

Vector example1_result() {
  Vector v(4);
  v << 0.229, 0.143, 0.357, 0.271;
  return v;
}

MassFunction example2_m() {
  return from_values(frame3(), {0.02, 0.1, 0.1, 0.25, 0.06, 0.27, 0.02, 0.18});
}

Vector example2_empty_reference() {
  Vector v(8);
  v << 0.3659, 0.0489, 0.2239, 0.0323, 0.2183, 0.0519, 0.0519, 0.0069;
  return v;
}

Vector example2_w1_reference() {
  Vector v(8);
  v << 0.0698, 0.345, 0.0462, 0.21, 0.0742, 0.196, 0.0098, 0.049;
  return v;
}

ProductFrame example3_frame() {
  return ProductFrame(frame2(), FrameOfDiscernment({"t1", "t2"}));
}

MassFunction example3_joint() {
  const ProductFrame pf = example3_frame();
  // Focal sets, by joint bitmask over pairs (w_i, t_j) at bit 2i + j:
  //   {(w1,t1)}                     -> 0b0001, mass 0.1
  //   {(w1,t1),(w1,t2)}             -> 0b0011, mass 0.2
  //   {(w1,t2),(w2,t2)}             -> 0b1010, mass 0.4
  //   everything                    -> 0b1111, mass 0.3
  return make_mass(pf.joint(),
                   {{0b0001, 0.1}, {0b0011, 0.2}, {0b1010, 0.4}, {0b1111, 0.3}});
}

MassFunction example45_marginal() {
  return from_values(frame2(), {0.0, 0.1, 0.4, 0.5});
}

}  // namespace tbmq::fixtures
