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

#ifndef TBMQ_BOOLEAN_EXPR_HPP
#define TBMQ_BOOLEAN_EXPR_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tbmq/frame.hpp"

namespace tbmq {

/// Layered DAG of set-algebra operations over k evidence inputs.
///
/// AND/OR nodes take any number of operands ("operation components");
/// NOT costs nothing and is absorbed into its consumer when the
/// expression is laid out in layers or compiled to a circuit.
class BooleanExpression {
 public:
  enum class NodeKind { Input, Not, And, Or };

  struct Node {
    NodeKind kind;
    int input = -1;                 // for Input nodes: 0-based slot
    std::vector<int> children;      // node ids (Not has exactly one)
  };

  /// Parses the CLI syntax: inputs x1..xk, operators ! & | and
  /// parentheses, '!' binding tightest, '&' before '|'. Associative
  /// chains collapse into one n-ary component. Throws ParseError.
  static BooleanExpression parse(std::string_view text);

  static BooleanExpression input(int slot);
  BooleanExpression operator!() const;
  friend BooleanExpression operator&(const BooleanExpression& a,
                                     const BooleanExpression& b);
  friend BooleanExpression operator|(const BooleanExpression& a,
                                     const BooleanExpression& b);

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  int root() const noexcept { return root_; }

  /// Number of evidence slots; the highest x-index referenced.
  int num_inputs() const noexcept { return num_inputs_; }

  /// Longest path of AND/OR nodes; NOT does not count.
  int layer_count() const;

  /// AND/OR node ids grouped by layer (1-based layer - 1 = position);
  /// components within one group can execute simultaneously.
  std::vector<std::vector<int>> layers() const;

  /// Applies the expression to subset bitmasks, one per input slot.
  /// `full_set` bounds complements. Size mismatch throws ArityMismatch.
  SubsetIndex evaluate(std::span<const SubsetIndex> inputs,
                       SubsetIndex full_set) const;

  std::string to_string() const;

 private:
  BooleanExpression() = default;
  int layer_of(int node) const;
  void compact();  // drop nodes unreachable from the root

  std::vector<Node> nodes_;
  int root_ = -1;
  int num_inputs_ = 0;
};

}  // namespace tbmq

#endif  // TBMQ_BOOLEAN_EXPR_HPP
