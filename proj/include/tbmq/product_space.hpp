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

#ifndef TBMQ_PRODUCT_SPACE_HPP
#define TBMQ_PRODUCT_SPACE_HPP

#include "tbmq/mass.hpp"

namespace tbmq {

enum class Side { Left, Right };

/// Product frame Omega x Theta. Pair element (w_{i+1}, t_{j+1}) occupies
/// joint position i * |Theta| + j (row-major, Omega-major) and is labeled
/// "<left>*<right>". Joints are capped at 12 pair elements.
class ProductFrame {
 public:
  ProductFrame(FrameOfDiscernment left, FrameOfDiscernment right);

  const FrameOfDiscernment& left() const noexcept { return left_; }
  const FrameOfDiscernment& right() const noexcept { return right_; }
  const FrameOfDiscernment& joint() const noexcept { return joint_; }

  int pair_position(int left_element, int right_element) const noexcept {
    return left_element * right_.size() + right_element;
  }

  /// Cylinder F x Theta as a joint subset.
  SubsetIndex cylinder_left(SubsetIndex left_subset) const;

  /// Cylinder Omega x H as a joint subset.
  SubsetIndex cylinder_right(SubsetIndex right_subset) const;

  /// Point projection {w | exists t with (w,t) in G} of a joint subset.
  SubsetIndex project_left(SubsetIndex joint_subset) const;
  SubsetIndex project_right(SubsetIndex joint_subset) const;

  /// (F x H) united with (Omega x (Theta minus H)).
  SubsetIndex balloon(SubsetIndex left_subset, SubsetIndex right_subset) const;

 private:
  FrameOfDiscernment left_;
  FrameOfDiscernment right_;
  FrameOfDiscernment joint_;
};

/// Projects a joint mass function onto one side; masses of joint focal
/// sets with the same projection accumulate. Throws NotAProductFrame if
/// the mass function does not live on pf.joint().
MassFunction marginalize(const ProductFrame& pf, const MassFunction& joint,
                         Side side);

/// Lifts a mass function on Omega to the joint frame by mapping each
/// focal F to the cylinder F x Theta.
MassFunction vacuous_extend(const ProductFrame& pf, const MassFunction& left);

/// Lifts a conditional mass function m[H] on Omega to the joint frame:
/// focal F maps to (F x H) united with (Omega x (Theta minus H)).
/// Throws EmptyConditioningSet when H is empty.
MassFunction ballooning_extend(const ProductFrame& pf,
                               const MassFunction& conditional,
                               SubsetIndex given);

/// Conditions a joint mass function on "the Theta value lies in H":
/// combine with the categorical mass on Omega x H under ccr, then
/// marginalize onto Omega. Output is left unnormalized.
MassFunction conditioning(const ProductFrame& pf, const MassFunction& joint,
                          SubsetIndex given);

}  // namespace tbmq

#endif  // TBMQ_PRODUCT_SPACE_HPP
