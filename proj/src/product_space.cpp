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

#include "tbmq/product_space.hpp"

#include <string>

#include "tbmq/credal.hpp"

namespace tbmq {

namespace {

constexpr int kMaxJointElements = 12;

std::vector<std::string> joint_labels(const FrameOfDiscernment& left,
                                      const FrameOfDiscernment& right) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(left.size()) * right.size());
  for (const auto& l : left.elements()) {
    if (l.find('*') != std::string::npos) {
      throw_error(ErrorCode::InvalidArgument,
                  "left frame label may not contain '*': " + l);
    }
    for (const auto& r : right.elements()) {
      if (r.find('*') != std::string::npos) {
        throw_error(ErrorCode::InvalidArgument,
                    "right frame label may not contain '*': " + r);
      }
      labels.push_back(l + "*" + r);
    }
  }
  return labels;
}

}  // namespace

ProductFrame::ProductFrame(FrameOfDiscernment left, FrameOfDiscernment right)
    : left_(std::move(left)),
      right_(std::move(right)),
      joint_(joint_labels(left_, right_)) {
  if (left_.size() * right_.size() > kMaxJointElements) {
    throw_error(ErrorCode::FrameTooLarge,
                "joint frames are limited to " +
                    std::to_string(kMaxJointElements) + " pair elements");
  }
}

SubsetIndex ProductFrame::cylinder_left(SubsetIndex left_subset) const {
  SubsetIndex joint = 0;
  for (int i = 0; i < left_.size(); ++i) {
    if (!subset_contains(left_subset, i)) continue;
    for (int j = 0; j < right_.size(); ++j) {
      joint |= SubsetIndex{1} << pair_position(i, j);
    }
  }
  return joint;
}

SubsetIndex ProductFrame::cylinder_right(SubsetIndex right_subset) const {
  SubsetIndex joint = 0;
  for (int j = 0; j < right_.size(); ++j) {
    if (!subset_contains(right_subset, j)) continue;
    for (int i = 0; i < left_.size(); ++i) {
      joint |= SubsetIndex{1} << pair_position(i, j);
    }
  }
  return joint;
}

SubsetIndex ProductFrame::project_left(SubsetIndex joint_subset) const {
  SubsetIndex out = 0;
  for (int i = 0; i < left_.size(); ++i) {
    for (int j = 0; j < right_.size(); ++j) {
      if (subset_contains(joint_subset, pair_position(i, j))) {
        out |= SubsetIndex{1} << i;
        break;
      }
    }
  }
  return out;
}

SubsetIndex ProductFrame::project_right(SubsetIndex joint_subset) const {
  SubsetIndex out = 0;
  for (int j = 0; j < right_.size(); ++j) {
    for (int i = 0; i < left_.size(); ++i) {
      if (subset_contains(joint_subset, pair_position(i, j))) {
        out |= SubsetIndex{1} << j;
        break;
      }
    }
  }
  return out;
}

SubsetIndex ProductFrame::balloon(SubsetIndex left_subset,
                                  SubsetIndex right_subset) const {
  const SubsetIndex complement = ~right_subset & right_.full_set();
  SubsetIndex joint = cylinder_right(complement);
  for (int i = 0; i < left_.size(); ++i) {
    if (!subset_contains(left_subset, i)) continue;
    for (int j = 0; j < right_.size(); ++j) {
      if (subset_contains(right_subset, j)) {
        joint |= SubsetIndex{1} << pair_position(i, j);
      }
    }
  }
  return joint;
}

namespace {

void check_joint(const ProductFrame& pf, const MassFunction& m) {
  if (m.frame() != pf.joint()) {
    throw_error(ErrorCode::NotAProductFrame,
                "mass function does not live on the joint frame");
  }
}

void check_given(const ProductFrame& pf, SubsetIndex given) {
  if (given == 0) {
    throw_error(ErrorCode::EmptyConditioningSet,
                "conditioning set must be nonempty");
  }
  if (given > pf.right().full_set()) {
    throw_error(ErrorCode::InvalidArgument,
                "conditioning set out of range for the right frame");
  }
}

}  // namespace

MassFunction marginalize(const ProductFrame& pf, const MassFunction& joint,
                         Side side) {
  check_joint(pf, joint);
  const FrameOfDiscernment& target =
      side == Side::Left ? pf.left() : pf.right();
  Vector out = Vector::Zero(target.subset_count());
  for (SubsetIndex g : joint.focal_sets()) {
    const SubsetIndex f =
        side == Side::Left ? pf.project_left(g) : pf.project_right(g);
    out(static_cast<Eigen::Index>(f)) += joint(g);
  }
  return MassFunction::from_computed(target, std::move(out));
}

MassFunction vacuous_extend(const ProductFrame& pf, const MassFunction& left) {
  if (left.frame() != pf.left()) {
    throw_error(ErrorCode::NotAProductFrame,
                "mass function does not live on the left frame");
  }
  Vector out = Vector::Zero(pf.joint().subset_count());
  for (SubsetIndex f : left.focal_sets()) {
    out(static_cast<Eigen::Index>(pf.cylinder_left(f))) += left(f);
  }
  return MassFunction::from_computed(pf.joint(), std::move(out));
}

MassFunction ballooning_extend(const ProductFrame& pf,
                               const MassFunction& conditional,
                               SubsetIndex given) {
  if (conditional.frame() != pf.left()) {
    throw_error(ErrorCode::NotAProductFrame,
                "mass function does not live on the left frame");
  }
  check_given(pf, given);
  Vector out = Vector::Zero(pf.joint().subset_count());
  for (SubsetIndex f : conditional.focal_sets()) {
    out(static_cast<Eigen::Index>(pf.balloon(f, given))) += conditional(f);
  }
  return MassFunction::from_computed(pf.joint(), std::move(out));
}

MassFunction conditioning(const ProductFrame& pf, const MassFunction& joint,
                          SubsetIndex given) {
  check_joint(pf, joint);
  check_given(pf, given);
  const MassFunction window =
      MassFunction::categorical(pf.joint(), pf.cylinder_right(given));
  return marginalize(pf, ccr(joint, window), Side::Left);
}

}  // namespace tbmq
