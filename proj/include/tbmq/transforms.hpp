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

#ifndef TBMQ_TRANSFORMS_HPP
#define TBMQ_TRANSFORMS_HPP

#include "tbmq/mass.hpp"

namespace tbmq {

// Forward transforms. Definitions, with F the subset at each index:
//   Bel(F) = sum of m(G) over nonempty G subseteq F          Bel(empty) = 0
//   b(F)   = sum of m(G) over G subseteq F                   b = Bel + m(empty)
//   q(F)   = sum of m(G) over G supseteq F                   q(empty) = 1
//   Pl(F)  = sum of m(G) over G intersecting F               Pl(F) = 1 - b(~F)
// Note Pl(F) = 1 - Bel(~F) only when m(empty) = 0; with unnormalized
// mass functions the implicability form of the duality is the exact one.
BeliefVector to_bel(const MassFunction& m);
ImplicabilityVector to_b(const MassFunction& m);
CommonalityVector to_q(const MassFunction& m);
PlausibilityVector to_pl(const MassFunction& m);

// Mobius inversions; each is the exact inverse of the transform above.
MassFunction bel_to_mass(const BeliefVector& bel);
MassFunction b_to_mass(const ImplicabilityVector& b);
MassFunction q_to_mass(const CommonalityVector& q);
MassFunction pl_to_mass(const PlausibilityVector& pl);

/// 0/1 matrix with m2b(i,j) = 1 iff F_j subseteq F_i, so m2b * m = b.
/// Frames above 12 elements are rejected (FrameTooLarge): the dense
/// matrix would need 2^n x 2^n entries.
Matrix m2b_matrix(const FrameOfDiscernment& frame);

/// 0/1 matrix with m2q(i,j) = 1 iff F_i subseteq F_j, so m2q * m = q.
Matrix m2q_matrix(const FrameOfDiscernment& frame);

/// Pignistic probability over the n elements:
/// BetP(w) = sum over focal F containing w of m(F) / ((1 - m(empty)) |F|).
/// Throws TotalConflict when all mass sits on the empty set.
Vector betp(const MassFunction& m);

/// Plausibility transform: pl(w) normalized over elements.
/// Throws ZeroContour when the contour function is identically zero.
Vector pl_transform(const MassFunction& m);

/// Singleton plausibilities pl(w_j) = sum of m(F) over F containing w_j.
ContourFunction contour(const MassFunction& m);

namespace detail {

// In-place fast zeta / Mobius transforms over the subset lattice,
// O(n 2^n) each. They are the kernels behind the typed transforms.
void subset_sum_in_place(Vector& v);       // v <- its subset sums (zeta)
void subset_mobius_in_place(Vector& v);    // inverse of subset_sum
void superset_sum_in_place(Vector& v);     // v <- its superset sums
void superset_mobius_in_place(Vector& v);  // inverse of superset_sum

}  // namespace detail

}  // namespace tbmq

#endif  // TBMQ_TRANSFORMS_HPP
