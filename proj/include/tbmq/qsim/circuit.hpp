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

#ifndef TBMQ_QSIM_CIRCUIT_HPP
#define TBMQ_QSIM_CIRCUIT_HPP

#include <string>
#include <vector>

#include "tbmq/errors.hpp"

namespace tbmq::qsim {

/// One control wire: fires on |1> when positive, on |0> when negative.
/// Negative controls are first-class; no X-conjugation rewriting happens
/// anywhere, so gate counts match the circuit as drawn.
struct Control {
  int qubit;
  bool positive = true;

  friend bool operator==(const Control&, const Control&) = default;
};

enum class GateKind { X, RY, MCX, MCRY };

/// X, RY(theta), multi-controlled NOT, multi-controlled RY. CNOT and
/// Toffoli are MCX with one and two controls.
struct Gate {
  GateKind kind;
  int target;
  double theta = 0.0;
  std::vector<Control> controls;

  static Gate x(int target) { return Gate{GateKind::X, target, 0.0, {}}; }
  static Gate ry(int target, double theta) {
    return Gate{GateKind::RY, target, theta, {}};
  }
  static Gate mcx(int target, std::vector<Control> controls) {
    return Gate{GateKind::MCX, target, 0.0, std::move(controls)};
  }
  static Gate mcry(int target, double theta, std::vector<Control> controls) {
    return Gate{GateKind::MCRY, target, theta, std::move(controls)};
  }
  static Gate cnot(int control, int target, bool positive = true) {
    return mcx(target, {Control{control, positive}});
  }
  static Gate toffoli(int c1, int c2, int target) {
    return mcx(target, {Control{c1, true}, Control{c2, true}});
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list over `num_qubits` wires, with optional qubit names
/// for dumps (one per wire when present).
struct Circuit {
  int num_qubits = 0;
  std::vector<Gate> gates;
  std::vector<std::string> labels;

  Circuit() = default;
  explicit Circuit(int nq) : num_qubits(nq) {}

  Circuit& add(Gate gate);
};

}  // namespace tbmq::qsim

#endif  // TBMQ_QSIM_CIRCUIT_HPP
