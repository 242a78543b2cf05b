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

#ifndef TBMQ_CREDAL_HPP
#define TBMQ_CREDAL_HPP

#include <span>

#include "tbmq/boolean_expr.hpp"
#include "tbmq/mass.hpp"

namespace tbmq {

// Combination rules for independent sources. Each rule convolves the
// focal sets under a fixed set operation:
//   ccr   intersection          dcr   union
//   cecr  per-element XNOR      decr  per-element XOR
// All are unnormalized: conflict stays on the empty set.

MassFunction ccr(const MassFunction& m1, const MassFunction& m2);
MassFunction dcr(const MassFunction& m1, const MassFunction& m2);
MassFunction cecr(const MassFunction& m1, const MassFunction& m2);
MassFunction decr(const MassFunction& m1, const MassFunction& m2);

/// Same result as ccr through the pointwise commonality product
/// q12 = q1 q2. Kept as an independent algebraic route.
MassFunction ccr_via_commonality(const MassFunction& m1,
                                 const MassFunction& m2);

/// Same result as dcr through the implicability product b12 = b1 b2.
MassFunction dcr_via_implicability(const MassFunction& m1,
                                   const MassFunction& m2);

/// Boolean-algebra-based combination: lifts an arbitrary layered
/// expression over k sources from sets to random sets by enumerating
/// tuples of focal sets. Cost is the product of the support sizes.
MassFunction bacr(std::span<const MassFunction> masses,
                  const BooleanExpression& expr);

enum class AlphaKind { Conjunctive, Disjunctive };

enum class KMatrixKind {
  ConjunctiveAlpha,  // K^{and,alpha}_F
  DisjunctiveAlpha,  // K^{or,alpha}_F
  ContourEnhance,    // K^{+,beta}_F
  ContourReduce,     // K^{-,beta}_F
};

/// Column-stochastic 2^n x 2^n operator on mass vectors, built as a
/// Kronecker product of 2x2 factors (first factor = highest element).
struct KMatrix {
  FrameOfDiscernment frame;
  KMatrixKind kind;
  SubsetIndex subset;
  double param;
  Matrix matrix;
};

KMatrix k_matrix_conj(const FrameOfDiscernment& frame, SubsetIndex focal,
                      double alpha);
KMatrix k_matrix_disj(const FrameOfDiscernment& frame, SubsetIndex focal,
                      double alpha);
KMatrix cer_matrix(const FrameOfDiscernment& frame, SubsetIndex focal,
                   double beta);
KMatrix crr_matrix(const FrameOfDiscernment& frame, SubsetIndex focal,
                   double beta);

MassFunction apply_k(const KMatrix& k, const MassFunction& m);

/// The vector K^{.,alpha}_F * m2 without materializing the matrix;
/// O(n 2^n) per subset.
Vector alpha_adjusted_vector(const MassFunction& m2, SubsetIndex focal,
                             double alpha, AlphaKind kind);

/// Parametric family interpolating the combination rules: alpha = 1
/// reproduces ccr/dcr, alpha = 0 reproduces cecr/decr. Computed as
/// sum over F of m1(F) * K^{.,alpha}_F * m2.
MassFunction alpha_junction(const MassFunction& m1, const MassFunction& m2,
                            double alpha, AlphaKind kind);

/// Contour enhancement revision: raises the total mass carried by the
/// elements of `focal` by degree beta, leaving other contours untouched.
MassFunction cer(const MassFunction& m, SubsetIndex focal, double beta);

/// Contour reduction revision: the decreasing counterpart of cer.
MassFunction crr(const MassFunction& m, SubsetIndex focal, double beta);

}  // namespace tbmq

#endif  // TBMQ_CREDAL_HPP
