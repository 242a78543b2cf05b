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

#include "tbmq/transforms.hpp"

#include <cmath>
#include <string>

namespace tbmq {

namespace detail {

void subset_sum_in_place(Vector& v) {
  const Eigen::Index dim = v.size();
  for (Eigen::Index bit = 1; bit < dim; bit <<= 1) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (i & bit) v(i) += v(i ^ bit);
    }
  }
}

void subset_mobius_in_place(Vector& v) {
  const Eigen::Index dim = v.size();
  for (Eigen::Index bit = 1; bit < dim; bit <<= 1) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (i & bit) v(i) -= v(i ^ bit);
    }
  }
}

void superset_sum_in_place(Vector& v) {
  const Eigen::Index dim = v.size();
  for (Eigen::Index bit = 1; bit < dim; bit <<= 1) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (!(i & bit)) v(i) += v(i | bit);
    }
  }
}

void superset_mobius_in_place(Vector& v) {
  const Eigen::Index dim = v.size();
  for (Eigen::Index bit = 1; bit < dim; bit <<= 1) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (!(i & bit)) v(i) -= v(i | bit);
    }
  }
}

}  // namespace detail

BeliefVector to_bel(const MassFunction& m) {
  Vector v = m.values();
  const double empty_mass = v(0);
  detail::subset_sum_in_place(v);
  v.array() -= empty_mass;  // drop the empty set's contribution
  return BeliefVector{m.frame(), std::move(v)};
}

ImplicabilityVector to_b(const MassFunction& m) {
  Vector v = m.values();
  detail::subset_sum_in_place(v);
  return ImplicabilityVector{m.frame(), std::move(v)};
}

CommonalityVector to_q(const MassFunction& m) {
  Vector v = m.values();
  detail::superset_sum_in_place(v);
  return CommonalityVector{m.frame(), std::move(v)};
}

PlausibilityVector to_pl(const MassFunction& m) {
  Vector b = m.values();
  detail::subset_sum_in_place(b);
  const Eigen::Index dim = b.size();
  Vector pl(dim);
  const Eigen::Index full = dim - 1;
  for (Eigen::Index i = 0; i < dim; ++i) pl(i) = 1.0 - b(full ^ i);
  return PlausibilityVector{m.frame(), std::move(pl)};
}

MassFunction bel_to_mass(const BeliefVector& bel) {
  // b(F) = Bel(F) + m(empty) and m(empty) = 1 - Bel(full set).
  Vector v = bel.values;
  v.array() += 1.0 - bel.values(bel.values.size() - 1);
  detail::subset_mobius_in_place(v);
  return MassFunction::from_computed(bel.frame, std::move(v));
}

MassFunction b_to_mass(const ImplicabilityVector& b) {
  Vector v = b.values;
  detail::subset_mobius_in_place(v);
  return MassFunction::from_computed(b.frame, std::move(v));
}

MassFunction q_to_mass(const CommonalityVector& q) {
  Vector v = q.values;
  detail::superset_mobius_in_place(v);
  return MassFunction::from_computed(q.frame, std::move(v));
}

MassFunction pl_to_mass(const PlausibilityVector& pl) {
  const Eigen::Index dim = pl.values.size();
  const Eigen::Index full = dim - 1;
  Vector b(dim);
  for (Eigen::Index i = 0; i < dim; ++i) b(i) = 1.0 - pl.values(full ^ i);
  detail::subset_mobius_in_place(b);
  return MassFunction::from_computed(pl.frame, std::move(b));
}

namespace {

constexpr int kMaxMatrixElements = 12;

void check_matrix_cap(const FrameOfDiscernment& frame) {
  if (frame.size() > kMaxMatrixElements) {
    throw_error(ErrorCode::FrameTooLarge,
                "dense 2^n x 2^n matrices are limited to n <= " +
                    std::to_string(kMaxMatrixElements) + ", got n = " +
                    std::to_string(frame.size()));
  }
}

}  // namespace

Matrix m2b_matrix(const FrameOfDiscernment& frame) {
  check_matrix_cap(frame);
  const Eigen::Index dim = frame.subset_count();
  Matrix out = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      if ((j & i) == j) out(i, j) = 1.0;
    }
  }
  return out;
}

Matrix m2q_matrix(const FrameOfDiscernment& frame) {
  check_matrix_cap(frame);
  const Eigen::Index dim = frame.subset_count();
  Matrix out = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      if ((i & j) == i) out(i, j) = 1.0;
    }
  }
  return out;
}

Vector betp(const MassFunction& m) {
  const double conflict = m(0);
  if (1.0 - conflict <= kNegativeNoiseTolerance) {
    throw_error(ErrorCode::TotalConflict,
                "pignistic transform undefined: m(empty) = 1");
  }
  const int n = m.num_elements();
  Vector out = Vector::Zero(n);
  const Eigen::Index dim = m.values().size();
  for (Eigen::Index i = 1; i < dim; ++i) {
    const double mass = m.values()(i);
    if (mass == 0.0) continue;
    const double share =
        mass / ((1.0 - conflict) * subset_cardinality(static_cast<SubsetIndex>(i)));
    for (int j = 0; j < n; ++j) {
      if (subset_contains(static_cast<SubsetIndex>(i), j)) out(j) += share;
    }
  }
  return out;
}

ContourFunction contour(const MassFunction& m) {
  const int n = m.num_elements();
  Vector out = Vector::Zero(n);
  const Eigen::Index dim = m.values().size();
  for (Eigen::Index i = 1; i < dim; ++i) {
    const double mass = m.values()(i);
    if (mass == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      if (subset_contains(static_cast<SubsetIndex>(i), j)) out(j) += mass;
    }
  }
  return ContourFunction{m.frame(), std::move(out)};
}

Vector pl_transform(const MassFunction& m) {
  Vector pl = contour(m).values;
  const double total = pl.sum();
  if (total <= 0.0) {
    throw_error(ErrorCode::ZeroContour,
                "plausibility transform undefined: contour is zero");
  }
  return pl / total;
}

}  // namespace tbmq
