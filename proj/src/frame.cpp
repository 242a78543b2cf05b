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

#include "tbmq/frame.hpp"

#include <algorithm>
#include <unordered_set>

namespace tbmq {

namespace {
constexpr int kMaxElements = 20;  // 2^20 vector entries at most
}

FrameOfDiscernment::FrameOfDiscernment(std::vector<std::string> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty() || elements_.size() > kMaxElements) {
    throw_error(ErrorCode::InvalidArgument,
                "frame must have between 1 and " +
                    std::to_string(kMaxElements) + " elements, got " +
                    std::to_string(elements_.size()));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : elements_) {
    if (label.empty()) {
      throw_error(ErrorCode::InvalidArgument, "empty element label");
    }
    if (label.find(',') != std::string::npos) {
      throw_error(ErrorCode::InvalidArgument,
                  "element label may not contain ',': " + label);
    }
    if (!seen.insert(label).second) {
      throw_error(ErrorCode::InvalidArgument,
                  "duplicate element label: " + label);
    }
  }
}

int FrameOfDiscernment::index_of(std::string_view label) const {
  auto it = std::find(elements_.begin(), elements_.end(), label);
  if (it == elements_.end()) {
    throw_error(ErrorCode::UnknownElement,
                "unknown element: " + std::string(label));
  }
  return static_cast<int>(it - elements_.begin());
}

SubsetIndex FrameOfDiscernment::subset_from_key(std::string_view key) const {
  SubsetIndex subset = 0;
  if (key.empty()) return subset;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = key.find(',', start);
    std::string_view label = key.substr(
        start, comma == std::string_view::npos ? comma : comma - start);
    subset |= SubsetIndex{1} << index_of(label);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return subset;
}

std::string FrameOfDiscernment::subset_key(SubsetIndex subset) const {
  std::string key;
  for (int j = 0; j < size(); ++j) {
    if (!subset_contains(subset, j)) continue;
    if (!key.empty()) key += ',';
    key += elements_[j];
  }
  return key;
}

}  // namespace tbmq
