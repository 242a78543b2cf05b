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

#ifndef TBMQ_MASS_HPP
#define TBMQ_MASS_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "tbmq/frame.hpp"

namespace tbmq {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Tolerance for the unit-sum check at construction boundaries.
inline constexpr double kMassSumTolerance = 1e-9;

/// Negative noise from alternating Mobius sums below this magnitude is
/// clamped to zero; anything more negative is rejected.
inline constexpr double kNegativeNoiseTolerance = 1e-12;

/// Dense basic belief assignment over the power set of a frame.
///
/// masses[i] is the mass of the subset with bitmask i. The empty set
/// (index 0) may carry positive mass; no normalization is ever applied
/// implicitly. Instances are immutable after construction.
class MassFunction {
 public:
  /// Validates entries >= 0 and sum == 1 within kMassSumTolerance.
  MassFunction(FrameOfDiscernment frame, Vector masses);

  /// All mass on the full set.
  static MassFunction vacuous(const FrameOfDiscernment& frame);

  /// All mass on one subset (the empty set is allowed).
  static MassFunction categorical(const FrameOfDiscernment& frame,
                                  SubsetIndex focal);

  /// Construction path for arithmetic results: clamps negative noise
  /// within kNegativeNoiseTolerance to zero, then validates as usual.
  static MassFunction from_computed(FrameOfDiscernment frame, Vector masses);

  const FrameOfDiscernment& frame() const noexcept { return frame_; }
  const Vector& values() const noexcept { return masses_; }
  double operator()(SubsetIndex subset) const {
    return masses_(static_cast<Eigen::Index>(subset));
  }
  int num_elements() const noexcept { return frame_.size(); }

  /// Subsets with strictly positive mass, ascending by index.
  std::vector<SubsetIndex> focal_sets() const;

  bool operator==(const MassFunction& other) const {
    return frame_ == other.frame_ && masses_ == other.masses_;
  }

 private:
  FrameOfDiscernment frame_;
  Vector masses_;
};

/// Sparse assignment used when building a mass function by hand.
using SubsetAssignments = std::vector<std::pair<SubsetIndex, double>>;

/// Densifies sparse assignments; unassigned subsets get zero mass.
/// Throws NegativeMass / SumNotOne / InvalidArgument on bad input.
MassFunction make_mass(const FrameOfDiscernment& frame,
                       const SubsetAssignments& assignments);

// The four identical-information re-encodings of a mass function, plus
// the contour function. One wrapper per role; values are indexed by
// subset bitmask (contour by element).

struct BeliefVector {
  FrameOfDiscernment frame;
  Vector values;
};

struct PlausibilityVector {
  FrameOfDiscernment frame;
  Vector values;
};

struct ImplicabilityVector {
  FrameOfDiscernment frame;
  Vector values;
};

struct CommonalityVector {
  FrameOfDiscernment frame;
  Vector values;
};

/// Plausibility restricted to singletons: values[j] = pl(element j).
struct ContourFunction {
  FrameOfDiscernment frame;
  Vector values;
};

}  // namespace tbmq

#endif  // TBMQ_MASS_HPP
