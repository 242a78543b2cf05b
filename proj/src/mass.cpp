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

#include "tbmq/mass.hpp"

#include <cmath>
#include <string>

namespace tbmq {

namespace {

void validate(const FrameOfDiscernment& frame, const Vector& masses) {
  if (masses.size() != static_cast<Eigen::Index>(frame.subset_count())) {
    throw_error(ErrorCode::InvalidArgument,
                "mass vector has " + std::to_string(masses.size()) +
                    " entries, frame needs " +
                    std::to_string(frame.subset_count()));
  }
  for (Eigen::Index i = 0; i < masses.size(); ++i) {
    const double v = masses(i);
    if (!std::isfinite(v)) {
      throw_error(ErrorCode::InvalidArgument, "non-finite mass entry");
    }
    if (v < 0.0) {
      throw_error(ErrorCode::NegativeMass,
                  "negative mass " + std::to_string(v) + " at subset index " +
                      std::to_string(i));
    }
  }
  const double sum = masses.sum();
  if (std::abs(sum - 1.0) > kMassSumTolerance) {
    throw_error(ErrorCode::SumNotOne,
                "masses sum to " + std::to_string(sum) + ", expected 1");
  }
}

}  // namespace

MassFunction::MassFunction(FrameOfDiscernment frame, Vector masses)
    : frame_(std::move(frame)), masses_(std::move(masses)) {
  validate(frame_, masses_);
}

MassFunction MassFunction::vacuous(const FrameOfDiscernment& frame) {
  return categorical(frame, frame.full_set());
}

MassFunction MassFunction::categorical(const FrameOfDiscernment& frame,
                                       SubsetIndex focal) {
  if (focal > frame.full_set()) {
    throw_error(ErrorCode::InvalidArgument, "subset index out of range");
  }
  Vector v = Vector::Zero(frame.subset_count());
  v(static_cast<Eigen::Index>(focal)) = 1.0;
  return MassFunction(frame, std::move(v));
}

MassFunction MassFunction::from_computed(FrameOfDiscernment frame,
                                         Vector masses) {
  for (Eigen::Index i = 0; i < masses.size(); ++i) {
    if (masses(i) < 0.0) {
      if (masses(i) < -kNegativeNoiseTolerance) {
        throw_error(ErrorCode::NegativeMass,
                    "computed mass " + std::to_string(masses(i)) +
                        " at subset index " + std::to_string(i) +
                        " is below the noise floor");
      }
      masses(i) = 0.0;
    }
  }
  return MassFunction(std::move(frame), std::move(masses));
}

std::vector<SubsetIndex> MassFunction::focal_sets() const {
  std::vector<SubsetIndex> focal;
  for (Eigen::Index i = 0; i < masses_.size(); ++i) {
    if (masses_(i) > 0.0) focal.push_back(static_cast<SubsetIndex>(i));
  }
  return focal;
}

MassFunction make_mass(const FrameOfDiscernment& frame,
                       const SubsetAssignments& assignments) {
  Vector v = Vector::Zero(frame.subset_count());
  for (const auto& [subset, value] : assignments) {
    if (subset > frame.full_set()) {
      throw_error(ErrorCode::InvalidArgument,
                  "subset index " + std::to_string(subset) +
                      " out of range for frame of size " +
                      std::to_string(frame.size()));
    }
    if (value < 0.0) {
      throw_error(ErrorCode::NegativeMass,
                  "negative mass assigned to subset " +
                      frame.subset_key(subset));
    }
    v(static_cast<Eigen::Index>(subset)) += value;
  }
  return MassFunction(frame, std::move(v));
}

}  // namespace tbmq
