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

#include "tbmq/qsim/text.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace tbmq::qsim {

namespace {

std::string format_theta(double theta) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", theta);
  return buf;
}

std::string format_controls(const std::vector<Control>& controls) {
  std::string out;
  for (const Control& c : controls) {
    if (!out.empty()) out += ',';
    out += c.positive ? '+' : '-';
    out += std::to_string(c.qubit);
  }
  return out;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw_error(ErrorCode::ParseError,
              "circuit text line " + std::to_string(line_no) + ": " + what);
}

// Splits "key=value" and checks the key.
std::string_view expect_field(std::string_view token, std::string_view key,
                              int line_no) {
  const std::size_t eq = token.find('=');
  if (eq == std::string_view::npos || token.substr(0, eq) != key) {
    fail(line_no, "expected field '" + std::string(key) + "=...', got '" +
                      std::string(token) + "'");
  }
  return token.substr(eq + 1);
}

int parse_int(std::string_view text, int line_no) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(line_no, "bad integer '" + std::string(text) + "'");
  }
  return value;
}

double parse_double(std::string_view text, int line_no) {
  const std::string copy(text);
  char* end = nullptr;
  const double value = std::strtod(copy.c_str(), &end);
  if (end != copy.c_str() + copy.size() || copy.empty()) {
    fail(line_no, "bad float '" + copy + "'");
  }
  return value;
}

std::vector<Control> parse_controls(std::string_view text, int line_no) {
  std::vector<Control> controls;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    if (item.size() < 2 || (item[0] != '+' && item[0] != '-')) {
      fail(line_no, "control must look like +3 or -5, got '" +
                        std::string(item) + "'");
    }
    controls.push_back(
        Control{parse_int(item.substr(1), line_no), item[0] == '+'});
    start = comma + 1;
  }
  if (controls.empty()) fail(line_no, "empty control list");
  return controls;
}

}  // namespace

std::string to_text(const Circuit& circuit) {
  std::string out = "qubits " + std::to_string(circuit.num_qubits) + "\n";
  if (!circuit.labels.empty()) {
    out += "labels ";
    for (std::size_t i = 0; i < circuit.labels.size(); ++i) {
      if (i) out += ',';
      out += circuit.labels[i];
    }
    out += '\n';
  }
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::X:
        out += "X target=" + std::to_string(g.target);
        break;
      case GateKind::RY:
        out += "RY target=" + std::to_string(g.target) +
               " theta=" + format_theta(g.theta);
        break;
      case GateKind::MCX:
        out += "MCX targets=" + std::to_string(g.target) +
               " controls=" + format_controls(g.controls);
        break;
      case GateKind::MCRY:
        out += "MCRY target=" + std::to_string(g.target) +
               " theta=" + format_theta(g.theta) +
               " controls=" + format_controls(g.controls);
        break;
    }
    out += '\n';
  }
  return out;
}

Circuit circuit_from_text(std::string_view text) {
  Circuit circuit;
  bool have_width = false;
  std::istringstream stream{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);

    std::istringstream fields(line);
    std::vector<std::string> token;
    for (std::string t; fields >> t;) token.push_back(std::move(t));
    if (token.empty()) continue;

    if (token[0] == "qubits") {
      if (token.size() != 2) fail(line_no, "usage: qubits N");
      circuit.num_qubits = parse_int(token[1], line_no);
      if (circuit.num_qubits < 1) fail(line_no, "qubit count must be >= 1");
      have_width = true;
      continue;
    }
    if (!have_width) fail(line_no, "first directive must be 'qubits N'");

    if (token[0] == "labels") {
      if (token.size() != 2) fail(line_no, "usage: labels a,b,c");
      std::vector<std::string> labels;
      std::string_view rest = token[1];
      std::size_t start = 0;
      while (start <= rest.size()) {
        std::size_t comma = rest.find(',', start);
        if (comma == std::string_view::npos) comma = rest.size();
        labels.emplace_back(rest.substr(start, comma - start));
        start = comma + 1;
      }
      if (static_cast<int>(labels.size()) != circuit.num_qubits) {
        fail(line_no, "label count does not match qubit count");
      }
      circuit.labels = std::move(labels);
      continue;
    }

    if (token[0] == "X") {
      if (token.size() != 2) fail(line_no, "usage: X target=T");
      circuit.add(
          Gate::x(parse_int(expect_field(token[1], "target", line_no), line_no)));
    } else if (token[0] == "RY") {
      if (token.size() != 3) fail(line_no, "usage: RY target=T theta=A");
      circuit.add(Gate::ry(
          parse_int(expect_field(token[1], "target", line_no), line_no),
          parse_double(expect_field(token[2], "theta", line_no), line_no)));
    } else if (token[0] == "MCX") {
      if (token.size() != 3) fail(line_no, "usage: MCX targets=T controls=...");
      circuit.add(Gate::mcx(
          parse_int(expect_field(token[1], "targets", line_no), line_no),
          parse_controls(expect_field(token[2], "controls", line_no),
                         line_no)));
    } else if (token[0] == "MCRY") {
      if (token.size() != 4) {
        fail(line_no, "usage: MCRY target=T theta=A controls=...");
      }
      circuit.add(Gate::mcry(
          parse_int(expect_field(token[1], "target", line_no), line_no),
          parse_double(expect_field(token[2], "theta", line_no), line_no),
          parse_controls(expect_field(token[3], "controls", line_no),
                         line_no)));
    } else {
      fail(line_no, "unknown directive '" + token[0] + "'");
    }
  }
  if (!have_width) {
    throw_error(ErrorCode::ParseError, "circuit text missing 'qubits N'");
  }
  return circuit;
}

}  // namespace tbmq::qsim
