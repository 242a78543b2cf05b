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

#ifndef TBMQ_FRAME_HPP
#define TBMQ_FRAME_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tbmq/errors.hpp"

namespace tbmq {

/// Subset of a frame, encoded as a bitmask: element j (0-based) present
/// iff bit j is set. The numeric value of the mask doubles as the position
/// of the subset in every 2^n-dimensional vector in this library, and as
/// the basis-state index of the corresponding quantum register (qubit j
/// carries element j, least significant bit first).
using SubsetIndex = std::uint32_t;

/// Ordered set of distinct element labels. The order fixes the
/// element <-> bit/qubit correspondence for the whole library.
class FrameOfDiscernment {
 public:
  /// Throws InvalidArgument on empty/duplicate labels, labels containing
  /// ',' (reserved for subset keys), or n outside [1, 20].
  explicit FrameOfDiscernment(std::vector<std::string> elements);

  int size() const noexcept { return static_cast<int>(elements_.size()); }
  SubsetIndex subset_count() const noexcept {
    return SubsetIndex{1} << size();
  }
  SubsetIndex full_set() const noexcept { return subset_count() - 1; }

  const std::vector<std::string>& elements() const noexcept {
    return elements_;
  }
  const std::string& element(int j) const { return elements_.at(j); }

  /// 0-based position of a label; throws UnknownElement.
  int index_of(std::string_view label) const;

  /// Parses a comma-joined subset key ("" means the empty set).
  SubsetIndex subset_from_key(std::string_view key) const;

  /// Comma-joined labels of the subset, in element order; "" for the
  /// empty set.
  std::string subset_key(SubsetIndex subset) const;

  bool operator==(const FrameOfDiscernment& other) const noexcept {
    return elements_ == other.elements_;
  }
  bool operator!=(const FrameOfDiscernment& other) const noexcept {
    return !(*this == other);
  }

 private:
  std::vector<std::string> elements_;
};

inline bool subset_contains(SubsetIndex subset, int element) noexcept {
  return (subset >> element) & 1u;
}

inline bool is_subset_of(SubsetIndex a, SubsetIndex b) noexcept {
  return (a & b) == a;
}

inline int subset_cardinality(SubsetIndex subset) noexcept {
  return __builtin_popcount(subset);
}

}  // namespace tbmq

#endif  // TBMQ_FRAME_HPP
