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

#ifndef TBMQ_FIXTURES_HPP
#define TBMQ_FIXTURES_HPP

#include "tbmq/mass.hpp"
#include "tbmq/product_space.hpp"

namespace tbmq::fixtures {

// Named reference inputs used by the CLI fixtures, the verify command
// and the acceptance suite.

/// Two-element frame {w1, w2}.
FrameOfDiscernment frame2();

/// Three-element frame {w1, w2, w3}.
FrameOfDiscernment frame3();

/// m1 = [0.2, 0.1, 0.4, 0.3] on frame2.
MassFunction example1_m1();

/// m2 = [0.05, 0.13, 0.02, 0.8] on frame2.
MassFunction example1_m2();

/// Exclusive-conjunction result [0.229, 0.143, 0.357, 0.271].
Vector example1_result();

/// m = [0.02, 0.1, 0.1, 0.25, 0.06, 0.27, 0.02, 0.18] on frame3.
MassFunction example2_m();

/// Reference vectors for the alpha = 0.3 conjunctive adjustment of
/// example2_m, for the empty set and for {w1} (4-decimal rounding).
Vector example2_empty_reference();
Vector example2_w1_reference();

/// Product frame {w1,w2} x {t1,t2}.
ProductFrame example3_frame();

/// Joint mass with marginals {w1}: 0.3 / full: 0.7 on the left and
/// {t1}: 0.1 / {t2}: 0.4 / full: 0.5 on the right.
MassFunction example3_joint();

/// {w1}: 0.1, {w2}: 0.4, full: 0.5 on frame2 — the input of both the
/// vacuous-extension and the ballooning-extension fixtures.
MassFunction example45_marginal();

}  // namespace tbmq::fixtures

#endif  // TBMQ_FIXTURES_HPP
