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

#include "tbmq/boolean_expr.hpp"

#include <algorithm>
#include <cctype>

namespace tbmq {

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  BooleanExpression::Node* scratch = nullptr;

  explicit Parser(std::string_view t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw_error(ErrorCode::ParseError,
                "expression error at offset " + std::to_string(pos) + ": " + what);
  }
};

}  // namespace

BooleanExpression BooleanExpression::input(int slot) {
  if (slot < 0) {
    throw_error(ErrorCode::InvalidArgument, "input slots are 0-based");
  }
  BooleanExpression e;
  e.nodes_.push_back(Node{NodeKind::Input, slot, {}});
  e.root_ = 0;
  e.num_inputs_ = slot + 1;
  return e;
}

namespace {

// Grafts `src` into `dst`, returning the new id of src's root.
int graft(std::vector<BooleanExpression::Node>& dst,
          const BooleanExpression& src) {
  const int offset = static_cast<int>(dst.size());
  for (auto node : src.nodes()) {
    for (auto& child : node.children) child += offset;
    dst.push_back(std::move(node));
  }
  return src.root() + offset;
}

}  // namespace

void BooleanExpression::compact() {
  std::vector<int> order;
  std::vector<int> remap(nodes_.size(), -1);
  auto visit = [&](auto&& self, int id) -> void {
    if (remap[id] != -1) return;
    for (int child : nodes_[id].children) self(self, child);
    remap[id] = -2;  // guard against revisiting before renumbering
    order.push_back(id);
  };
  visit(visit, root_);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    remap[order[pos]] = static_cast<int>(pos);
  }
  std::vector<Node> compacted;
  compacted.reserve(order.size());
  for (int id : order) {
    Node node = nodes_[id];
    for (int& child : node.children) child = remap[child];
    compacted.push_back(std::move(node));
  }
  nodes_ = std::move(compacted);
  root_ = remap[root_];
}

BooleanExpression BooleanExpression::operator!() const {
  BooleanExpression e;
  e.nodes_ = nodes_;
  e.nodes_.push_back(Node{NodeKind::Not, -1, {root_}});
  e.root_ = static_cast<int>(e.nodes_.size()) - 1;
  e.num_inputs_ = num_inputs_;
  return e;
}

BooleanExpression operator&(const BooleanExpression& a,
                            const BooleanExpression& b) {
  BooleanExpression e;
  BooleanExpression::Node top{BooleanExpression::NodeKind::And, -1, {}};
  for (const auto* side : {&a, &b}) {
    const int id = graft(e.nodes_, *side);
    if (e.nodes_[id].kind == BooleanExpression::NodeKind::And) {
      for (int child : e.nodes_[id].children) top.children.push_back(child);
    } else {
      top.children.push_back(id);
    }
  }
  e.nodes_.push_back(std::move(top));
  e.root_ = static_cast<int>(e.nodes_.size()) - 1;
  e.num_inputs_ = std::max(a.num_inputs_, b.num_inputs_);
  e.compact();
  return e;
}

BooleanExpression operator|(const BooleanExpression& a,
                            const BooleanExpression& b) {
  BooleanExpression e;
  BooleanExpression::Node top{BooleanExpression::NodeKind::Or, -1, {}};
  for (const auto* side : {&a, &b}) {
    const int id = graft(e.nodes_, *side);
    if (e.nodes_[id].kind == BooleanExpression::NodeKind::Or) {
      for (int child : e.nodes_[id].children) top.children.push_back(child);
    } else {
      top.children.push_back(id);
    }
  }
  e.nodes_.push_back(std::move(top));
  e.root_ = static_cast<int>(e.nodes_.size()) - 1;
  e.num_inputs_ = std::max(a.num_inputs_, b.num_inputs_);
  e.compact();
  return e;
}

namespace {

BooleanExpression parse_or(Parser& p);

BooleanExpression parse_factor(Parser& p) {
  p.skip_ws();
  if (p.eat('!')) {
    return !parse_factor(p);
  }
  if (p.eat('(')) {
    BooleanExpression inner = parse_or(p);
    if (!p.eat(')')) p.fail("expected ')'");
    return inner;
  }
  if (p.pos < p.text.size() && (p.text[p.pos] == 'x' || p.text[p.pos] == 'X')) {
    std::size_t start = ++p.pos;
    while (p.pos < p.text.size() &&
           std::isdigit(static_cast<unsigned char>(p.text[p.pos]))) {
      ++p.pos;
    }
    if (p.pos == start) p.fail("expected input index after 'x'");
    const int idx = std::stoi(std::string(p.text.substr(start, p.pos - start)));
    if (idx < 1) p.fail("input indices are 1-based");
    return BooleanExpression::input(idx - 1);
  }
  p.fail("expected '!', '(' or input like x1");
}

BooleanExpression parse_and(Parser& p) {
  BooleanExpression e = parse_factor(p);
  while (p.eat('&')) e = e & parse_factor(p);
  return e;
}

BooleanExpression parse_or(Parser& p) {
  BooleanExpression e = parse_and(p);
  while (p.eat('|')) e = e | parse_and(p);
  return e;
}

}  // namespace

BooleanExpression BooleanExpression::parse(std::string_view text) {
  Parser p(text);
  BooleanExpression e = parse_or(p);
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

int BooleanExpression::layer_of(int node) const {
  const Node& n = nodes_[node];
  switch (n.kind) {
    case NodeKind::Input:
      return 0;
    case NodeKind::Not:
      return layer_of(n.children[0]);
    case NodeKind::And:
    case NodeKind::Or: {
      int deepest = 0;
      for (int child : n.children) deepest = std::max(deepest, layer_of(child));
      return deepest + 1;
    }
  }
  return 0;
}

int BooleanExpression::layer_count() const { return layer_of(root_); }

std::vector<std::vector<int>> BooleanExpression::layers() const {
  std::vector<std::vector<int>> out(layer_count());
  for (int id = 0; id < static_cast<int>(nodes_.size()); ++id) {
    const NodeKind kind = nodes_[id].kind;
    if (kind == NodeKind::And || kind == NodeKind::Or) {
      out[layer_of(id) - 1].push_back(id);
    }
  }
  return out;
}

SubsetIndex BooleanExpression::evaluate(std::span<const SubsetIndex> inputs,
                                        SubsetIndex full_set) const {
  if (static_cast<int>(inputs.size()) != num_inputs_) {
    throw_error(ErrorCode::ArityMismatch,
                "expression has " + std::to_string(num_inputs_) +
                    " inputs, got " + std::to_string(inputs.size()));
  }
  std::vector<SubsetIndex> value(nodes_.size());
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    const Node& n = nodes_[id];
    switch (n.kind) {
      case NodeKind::Input:
        value[id] = inputs[n.input];
        break;
      case NodeKind::Not:
        value[id] = ~value[n.children[0]] & full_set;
        break;
      case NodeKind::And: {
        SubsetIndex v = full_set;
        for (int child : n.children) v &= value[child];
        value[id] = v;
        break;
      }
      case NodeKind::Or: {
        SubsetIndex v = 0;
        for (int child : n.children) v |= value[child];
        value[id] = v;
        break;
      }
    }
  }
  return value[root_];
}

std::string BooleanExpression::to_string() const {
  std::string out;
  auto render = [&](auto&& self, int id) -> void {
    const Node& n = nodes_[id];
    switch (n.kind) {
      case NodeKind::Input:
        out += 'x';
        out += std::to_string(n.input + 1);
        break;
      case NodeKind::Not:
        out += '!';
        if (nodes_[n.children[0]].kind == NodeKind::Input) {
          self(self, n.children[0]);
        } else {
          out += '(';
          self(self, n.children[0]);
          out += ')';
        }
        break;
      case NodeKind::And:
      case NodeKind::Or: {
        const char* op = n.kind == NodeKind::And ? " & " : " | ";
        out += '(';
        for (std::size_t i = 0; i < n.children.size(); ++i) {
          if (i) out += op;
          self(self, n.children[i]);
        }
        out += ')';
        break;
      }
    }
  };
  render(render, root_);
  return out;
}

}  // namespace tbmq
