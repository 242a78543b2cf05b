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

#include "tbmq/credal.hpp"

#include <Eigen/Dense>
#include <string>

#include "tbmq/linalg.hpp"
#include "tbmq/transforms.hpp"

namespace tbmq {

namespace {

void check_same_frame(const MassFunction& m1, const MassFunction& m2) {
  if (m1.frame() != m2.frame()) {
    throw_error(ErrorCode::FrameMismatch,
                "mass functions live on different frames");
  }
}

void check_unit_interval(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw_error(ErrorCode::InvalidArgument,
                std::string(name) + " must lie in [0, 1], got " +
                    std::to_string(value));
  }
}

template <typename SetOp>
MassFunction convolve(const MassFunction& m1, const MassFunction& m2,
                      SetOp&& op) {
  check_same_frame(m1, m2);
  Vector out = Vector::Zero(m1.values().size());
  for (SubsetIndex a : m1.focal_sets()) {
    const double ma = m1(a);
    for (SubsetIndex b : m2.focal_sets()) {
      out(static_cast<Eigen::Index>(op(a, b))) += ma * m2(b);
    }
  }
  return MassFunction::from_computed(m1.frame(), std::move(out));
}

}  // namespace

MassFunction ccr(const MassFunction& m1, const MassFunction& m2) {
  return convolve(m1, m2, [](SubsetIndex a, SubsetIndex b) { return a & b; });
}

MassFunction dcr(const MassFunction& m1, const MassFunction& m2) {
  return convolve(m1, m2, [](SubsetIndex a, SubsetIndex b) { return a | b; });
}

MassFunction cecr(const MassFunction& m1, const MassFunction& m2) {
  const SubsetIndex full = m1.frame().full_set();
  return convolve(m1, m2, [full](SubsetIndex a, SubsetIndex b) {
    return ~(a ^ b) & full;
  });
}

MassFunction decr(const MassFunction& m1, const MassFunction& m2) {
  return convolve(m1, m2, [](SubsetIndex a, SubsetIndex b) { return a ^ b; });
}

MassFunction ccr_via_commonality(const MassFunction& m1,
                                 const MassFunction& m2) {
  check_same_frame(m1, m2);
  Vector q = to_q(m1).values.cwiseProduct(to_q(m2).values);
  return q_to_mass(CommonalityVector{m1.frame(), std::move(q)});
}

MassFunction dcr_via_implicability(const MassFunction& m1,
                                   const MassFunction& m2) {
  check_same_frame(m1, m2);
  Vector b = to_b(m1).values.cwiseProduct(to_b(m2).values);
  return b_to_mass(ImplicabilityVector{m1.frame(), std::move(b)});
}

MassFunction bacr(std::span<const MassFunction> masses,
                  const BooleanExpression& expr) {
  if (masses.empty()) {
    throw_error(ErrorCode::ArityMismatch, "bacr needs at least one source");
  }
  if (static_cast<int>(masses.size()) != expr.num_inputs()) {
    throw_error(ErrorCode::ArityMismatch,
                "expression expects " + std::to_string(expr.num_inputs()) +
                    " sources, got " + std::to_string(masses.size()));
  }
  const FrameOfDiscernment& frame = masses[0].frame();
  for (const auto& m : masses) {
    if (m.frame() != frame) {
      throw_error(ErrorCode::FrameMismatch,
                  "all sources must share one frame");
    }
  }
  const SubsetIndex full = frame.full_set();
  const int k = static_cast<int>(masses.size());

  std::vector<std::vector<SubsetIndex>> supports(k);
  for (int j = 0; j < k; ++j) supports[j] = masses[j].focal_sets();

  Vector out = Vector::Zero(frame.subset_count());
  std::vector<SubsetIndex> tuple(k);
  // Odometer over the focal-set supports.
  auto recurse = [&](auto&& self, int j, double weight) -> void {
    if (j == k) {
      out(static_cast<Eigen::Index>(expr.evaluate(tuple, full))) += weight;
      return;
    }
    for (SubsetIndex f : supports[j]) {
      tuple[j] = f;
      self(self, j + 1, weight * masses[j](f));
    }
  };
  recurse(recurse, 0, 1.0);
  return MassFunction::from_computed(frame, std::move(out));
}

namespace {

Matrix conj_characteristic(double alpha) {
  Matrix c(2, 2);
  c << alpha, 1.0, 1.0 - alpha, 0.0;
  return c;
}

Matrix disj_characteristic(double alpha) {
  Matrix c(2, 2);
  c << 0.0, 1.0 - alpha, 1.0, alpha;
  return c;
}

Matrix enhance_characteristic(double beta) {
  Matrix c(2, 2);
  c << 1.0 - beta, 0.0, beta, 1.0;
  return c;
}

Matrix reduce_characteristic(double beta) {
  Matrix c(2, 2);
  c << 1.0, beta, 0.0, 1.0 - beta;
  return c;
}

// Kronecker chain with the 2x2 factor placed on the selected elements;
// the first factor carries the highest element so index bits line up
// with the subset coding.
Matrix kron_place(const FrameOfDiscernment& frame, SubsetIndex where,
                  const Matrix& factor) {
  const Matrix eye = Matrix::Identity(2, 2);
  Matrix out = Matrix::Identity(1, 1);
  for (int j = frame.size() - 1; j >= 0; --j) {
    out = kron(out, subset_contains(where, j) ? factor : eye);
  }
  return out;
}

void check_k_frame(const FrameOfDiscernment& frame, SubsetIndex focal) {
  if (frame.size() > 12) {
    throw_error(ErrorCode::FrameTooLarge,
                "dense K matrices are limited to n <= 12");
  }
  if (focal > frame.full_set()) {
    throw_error(ErrorCode::InvalidArgument, "subset index out of range");
  }
}

}  // namespace

KMatrix k_matrix_conj(const FrameOfDiscernment& frame, SubsetIndex focal,
                      double alpha) {
  check_k_frame(frame, focal);
  check_unit_interval(alpha, "alpha");
  // Characteristic factor sits on the elements *outside* the focal set.
  const SubsetIndex where = ~focal & frame.full_set();
  return KMatrix{frame, KMatrixKind::ConjunctiveAlpha, focal, alpha,
                 kron_place(frame, where, conj_characteristic(alpha))};
}

KMatrix k_matrix_disj(const FrameOfDiscernment& frame, SubsetIndex focal,
                      double alpha) {
  check_k_frame(frame, focal);
  check_unit_interval(alpha, "alpha");
  return KMatrix{frame, KMatrixKind::DisjunctiveAlpha, focal, alpha,
                 kron_place(frame, focal, disj_characteristic(alpha))};
}

KMatrix cer_matrix(const FrameOfDiscernment& frame, SubsetIndex focal,
                   double beta) {
  check_k_frame(frame, focal);
  check_unit_interval(beta, "beta");
  return KMatrix{frame, KMatrixKind::ContourEnhance, focal, beta,
                 kron_place(frame, focal, enhance_characteristic(beta))};
}

KMatrix crr_matrix(const FrameOfDiscernment& frame, SubsetIndex focal,
                   double beta) {
  check_k_frame(frame, focal);
  check_unit_interval(beta, "beta");
  return KMatrix{frame, KMatrixKind::ContourReduce, focal, beta,
                 kron_place(frame, focal, reduce_characteristic(beta))};
}

MassFunction apply_k(const KMatrix& k, const MassFunction& m) {
  if (k.frame != m.frame()) {
    throw_error(ErrorCode::FrameMismatch,
                "operator and mass function frames differ");
  }
  return MassFunction::from_computed(m.frame(), k.matrix * m.values());
}

namespace {

// Applies one 2x2 factor to the bit pair of `element` across the vector.
void apply_factor_in_place(Vector& v, int element, const Matrix& factor) {
  const Eigen::Index bit = Eigen::Index{1} << element;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i & bit) continue;
    const double lo = v(i);
    const double hi = v(i | bit);
    v(i) = factor(0, 0) * lo + factor(0, 1) * hi;
    v(i | bit) = factor(1, 0) * lo + factor(1, 1) * hi;
  }
}

}  // namespace

Vector alpha_adjusted_vector(const MassFunction& m2, SubsetIndex focal,
                             double alpha, AlphaKind kind) {
  check_unit_interval(alpha, "alpha");
  const FrameOfDiscernment& frame = m2.frame();
  if (focal > frame.full_set()) {
    throw_error(ErrorCode::InvalidArgument, "subset index out of range");
  }
  const Matrix factor = kind == AlphaKind::Conjunctive
                            ? conj_characteristic(alpha)
                            : disj_characteristic(alpha);
  const SubsetIndex where = kind == AlphaKind::Conjunctive
                                ? (~focal & frame.full_set())
                                : focal;
  Vector v = m2.values();
  for (int j = 0; j < frame.size(); ++j) {
    if (subset_contains(where, j)) apply_factor_in_place(v, j, factor);
  }
  return v;
}

MassFunction alpha_junction(const MassFunction& m1, const MassFunction& m2,
                            double alpha, AlphaKind kind) {
  check_same_frame(m1, m2);
  check_unit_interval(alpha, "alpha");
  Vector out = Vector::Zero(m1.values().size());
  for (SubsetIndex f : m1.focal_sets()) {
    out += m1(f) * alpha_adjusted_vector(m2, f, alpha, kind);
  }
  return MassFunction::from_computed(m1.frame(), std::move(out));
}

MassFunction cer(const MassFunction& m, SubsetIndex focal, double beta) {
  check_unit_interval(beta, "beta");
  Vector v = m.values();
  const Matrix factor = enhance_characteristic(beta);
  for (int j = 0; j < m.num_elements(); ++j) {
    if (subset_contains(focal, j)) apply_factor_in_place(v, j, factor);
  }
  return MassFunction::from_computed(m.frame(), std::move(v));
}

MassFunction crr(const MassFunction& m, SubsetIndex focal, double beta) {
  check_unit_interval(beta, "beta");
  Vector v = m.values();
  const Matrix factor = reduce_characteristic(beta);
  for (int j = 0; j < m.num_elements(); ++j) {
    if (subset_contains(focal, j)) apply_factor_in_place(v, j, factor);
  }
  return MassFunction::from_computed(m.frame(), std::move(v));
}

}  // namespace tbmq
