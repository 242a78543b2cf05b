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

#include "tbmq/qc/builders.hpp"

#include <cassert>
#include <cmath>
#include <string>

namespace tbmq::qc {

namespace {

constexpr int kSimWidthCap = 24;

using qsim::Circuit;
using qsim::Control;
using qsim::Gate;

// Emits the general preparation onto `qubits` within an existing
// circuit: X layer, RY on the first element, then the binary tree of
// conditional rotations. Angles come from subtree masses,
// theta = 2 atan2(sqrt(mass to the |0> branch), sqrt(mass staying |1>)),
// which pins the measured probabilities rather than any angle formula.
void emit_preparation(Circuit& circuit, const MassFunction& m,
                      std::span<const int> qubits) {
  const int n = m.num_elements();
  for (int i = 0; i < n; ++i) circuit.add(Gate::x(qubits[i]));

  // angles[k] holds the 2^k rotation angles of stage k (0 = skip).
  std::vector<std::vector<double>> angles(n);
  Vector subtree = m.values();
  for (int k = n - 1; k >= 0; --k) {
    const Eigen::Index half = Eigen::Index{1} << k;
    angles[k].assign(half, 0.0);
    for (Eigen::Index t = 0; t < half; ++t) {
      const double to_zero = subtree(t);
      const double to_one = subtree(t | half);
      if (to_zero > 0.0) {
        angles[k][t] = 2.0 * std::atan2(std::sqrt(to_zero), std::sqrt(to_one));
      }
      subtree(t) = to_zero + to_one;  // fold for the next (lower) stage
    }
    subtree.conservativeResize(half);
  }

  if (angles[0][0] != 0.0) circuit.add(Gate::ry(qubits[0], angles[0][0]));
  for (int k = 1; k < n; ++k) {
    for (Eigen::Index t = 0; t < static_cast<Eigen::Index>(angles[k].size());
         ++t) {
      if (angles[k][t] == 0.0) continue;
      std::vector<Control> controls;
      controls.reserve(k);
      for (int j = 0; j < k; ++j) {
        controls.push_back(Control{qubits[j], ((t >> j) & 1) != 0});
      }
      circuit.add(Gate::mcry(qubits[k], angles[k][t], std::move(controls)));
    }
  }
}

std::vector<int> iota_qubits(int first, int count) {
  std::vector<int> qubits(count);
  for (int i = 0; i < count; ++i) qubits[i] = first + i;
  return qubits;
}

void label_range(Circuit& circuit, std::span<const int> qubits,
                 const std::string& prefix) {
  circuit.labels.resize(circuit.num_qubits, "");
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    circuit.labels[qubits[i]] = prefix + std::to_string(i);
  }
}

/// Widens a circuit by `count` fresh wires and returns their ids.
std::vector<int> grow(Circuit& circuit, int count, const std::string& prefix) {
  const int first = circuit.num_qubits;
  circuit.num_qubits += count;
  auto qubits = iota_qubits(first, count);
  label_range(circuit, qubits, prefix);
  return qubits;
}

}  // namespace

PreparedMass prepare_mfqs(const MassFunction& m) {
  Circuit circuit(m.num_elements());
  auto qubits = iota_qubits(0, m.num_elements());
  label_range(circuit, qubits, "q");
  emit_preparation(circuit, m, qubits);
  return PreparedMass{std::move(circuit), std::move(qubits)};
}

PreparedMass prepare_poss_mfqs(const ContourFunction& pi) {
  const int n = pi.frame.size();
  Circuit circuit(n);
  auto qubits = iota_qubits(0, n);
  label_range(circuit, qubits, "q");
  for (int i = 0; i < n; ++i) {
    double p = pi.values(i);
    if (p < -1e-12 || p > 1.0 + 1e-12) {
      throw_error(ErrorCode::InvalidArgument,
                  "possibility degree outside [0, 1]: " + std::to_string(p));
    }
    p = std::min(1.0, std::max(0.0, p));
    circuit.add(Gate::ry(qubits[i], 2.0 * std::asin(std::sqrt(p))));
  }
  return PreparedMass{std::move(circuit), std::move(qubits)};
}

ScalarReadout extract_q(const PreparedMass& prep, SubsetIndex focal) {
  if (focal == 0) {
    throw_error(ErrorCode::EmptyControlSet,
                "q-extraction needs a nonempty subset (q(empty) = 1)");
  }
  Circuit circuit = prep.circuit;
  const std::size_t begin = circuit.gates.size();
  const int ancilla = grow(circuit, 1, "a")[0];
  std::vector<Control> controls;
  for (std::size_t i = 0; i < prep.qubits.size(); ++i) {
    if (subset_contains(focal, static_cast<int>(i))) {
      controls.push_back(Control{prep.qubits[i], true});
    }
  }
  circuit.add(Gate::mcx(ancilla, std::move(controls)));
  return ScalarReadout{std::move(circuit), ancilla, 1, begin};
}

ScalarReadout extract_b(const PreparedMass& prep, SubsetIndex focal) {
  const auto n = static_cast<int>(prep.qubits.size());
  const SubsetIndex full = (SubsetIndex{1} << n) - 1;
  if (focal == full) {
    throw_error(ErrorCode::EmptyControlSet,
                "b-extraction needs a proper subset (b(full) = 1)");
  }
  Circuit circuit = prep.circuit;
  const std::size_t begin = circuit.gates.size();
  const int ancilla = grow(circuit, 1, "a")[0];
  std::vector<Control> controls;
  for (int i = 0; i < n; ++i) {
    if (!subset_contains(focal, i)) {
      controls.push_back(Control{prep.qubits[i], false});
    }
  }
  circuit.add(Gate::mcx(ancilla, std::move(controls)));
  return ScalarReadout{std::move(circuit), ancilla, 1, begin};
}

BankReadout plausibility_fanout(const PreparedMass& prep) {
  Circuit circuit = prep.circuit;
  const std::size_t begin = circuit.gates.size();
  const int n = static_cast<int>(prep.qubits.size());
  auto bank = grow(circuit, n, "a");
  for (int i = 0; i < n; ++i) {
    circuit.add(Gate::cnot(prep.qubits[i], bank[i]));
  }
  return BankReadout{std::move(circuit), std::move(bank), n, begin};
}

Vector decode_pl_transform(const qsim::QuantumState& state,
                           std::span<const int> bank) {
  Vector pl(bank.size());
  for (std::size_t i = 0; i < bank.size(); ++i) {
    const int qubit[] = {bank[i]};
    pl(static_cast<Eigen::Index>(i)) = qsim::probabilities(state, qubit)(1);
  }
  const double total = pl.sum();
  if (total < 1e-12) {
    throw_error(ErrorCode::ZeroContour,
                "plausibility transform undefined: contour is zero");
  }
  return pl / total;
}

MultiPrepared prepare_registers(std::span<const MassFunction> masses) {
  if (masses.empty()) {
    throw_error(ErrorCode::ArityMismatch, "need at least one mass function");
  }
  const FrameOfDiscernment& frame = masses[0].frame();
  for (const auto& m : masses) {
    if (m.frame() != frame) {
      throw_error(ErrorCode::FrameMismatch,
                  "all registers must share one frame");
    }
  }
  const int n = frame.size();
  const int k = static_cast<int>(masses.size());
  Circuit circuit(n * k);
  circuit.labels.assign(circuit.num_qubits, "");
  MultiPrepared prep;
  for (int j = 0; j < k; ++j) {
    auto qubits = iota_qubits(j * n, n);
    for (int i = 0; i < n; ++i) {
      circuit.labels[qubits[i]] =
          "q" + std::to_string(i) + "_" + std::to_string(j + 1);
    }
    emit_preparation(circuit, masses[j], qubits);
    prep.registers.push_back(std::move(qubits));
  }
  prep.circuit = std::move(circuit);
  return prep;
}

namespace {

struct ResolvedOperand {
  std::vector<int> qubits;
  bool negated = false;
};

// Compiles the expression DAG onto the circuit. AND/OR nodes allocate a
// fresh bank; negations become control-polarity flips at the consumer.
ResolvedOperand compile_node(Circuit& circuit, const BooleanExpression& expr,
                             int node_id,
                             const std::vector<std::vector<int>>& registers,
                             std::vector<ResolvedOperand>& memo,
                             std::vector<char>& resolved, int n,
                             int& bank_counter) {
  if (resolved[node_id]) return memo[node_id];
  const auto& node = expr.nodes()[node_id];
  ResolvedOperand out;
  switch (node.kind) {
    case BooleanExpression::NodeKind::Input:
      out = ResolvedOperand{registers[node.input], false};
      break;
    case BooleanExpression::NodeKind::Not: {
      out = compile_node(circuit, expr, node.children[0], registers, memo,
                         resolved, n, bank_counter);
      out.negated = !out.negated;
      break;
    }
    case BooleanExpression::NodeKind::And:
    case BooleanExpression::NodeKind::Or: {
      const bool is_or = node.kind == BooleanExpression::NodeKind::Or;
      std::vector<ResolvedOperand> inputs;
      inputs.reserve(node.children.size());
      for (int child : node.children) {
        inputs.push_back(compile_node(circuit, expr, child, registers, memo,
                                      resolved, n, bank_counter));
      }
      if (circuit.num_qubits + n > kSimWidthCap) {
        throw_error(ErrorCode::AncillaBudgetExceeded,
                    "expression needs more than " +
                        std::to_string(kSimWidthCap) + " qubits");
      }
      auto bank =
          grow(circuit, n, "a" + std::to_string(bank_counter++) + "_");
      for (int i = 0; i < n; ++i) {
        std::vector<Control> controls;
        controls.reserve(inputs.size());
        for (const ResolvedOperand& in : inputs) {
          // AND fires on (possibly negated) ones; OR is its De Morgan
          // dual, so every polarity flips and the target is inverted.
          const bool positive = is_or ? in.negated : !in.negated;
          controls.push_back(Control{in.qubits[i], positive});
        }
        circuit.add(Gate::mcx(bank[i], std::move(controls)));
      }
      if (is_or) {
        for (int i = 0; i < n; ++i) circuit.add(Gate::x(bank[i]));
      }
      out = ResolvedOperand{std::move(bank), false};
      break;
    }
  }
  memo[node_id] = out;
  resolved[node_id] = 1;
  return out;
}

}  // namespace

BankReadout bacr_circuit(const MultiPrepared& prep,
                         const BooleanExpression& expr) {
  if (expr.num_inputs() != static_cast<int>(prep.registers.size())) {
    throw_error(ErrorCode::ArityMismatch,
                "expression expects " + std::to_string(expr.num_inputs()) +
                    " registers, got " +
                    std::to_string(prep.registers.size()));
  }
  Circuit circuit = prep.circuit;
  const std::size_t begin = circuit.gates.size();
  const int n = static_cast<int>(prep.registers[0].size());
  std::vector<ResolvedOperand> memo(expr.nodes().size());
  std::vector<char> resolved(expr.nodes().size(), 0);
  int bank_counter = 0;
  ResolvedOperand root =
      compile_node(circuit, expr, expr.root(), prep.registers, memo, resolved,
                   n, bank_counter);
  if (root.negated) {
    for (int q : root.qubits) circuit.add(Gate::x(q));
  }
  const int ancillas =
      circuit.num_qubits - static_cast<int>(prep.registers.size()) * n;
  return BankReadout{std::move(circuit), std::move(root.qubits), ancillas,
                     begin};
}

namespace {

// Pairwise cascade shared by the multi-source conjunction/disjunction:
// each stage writes one fresh bank from the running result and the next
// register.
BankReadout combine_cascade(const MultiPrepared& prep, bool disjunctive) {
  // No width cap here: oversized cascades are still useful for gate
  // accounting, and simulation enforces its own limit.
  Circuit circuit = prep.circuit;
  const std::size_t begin = circuit.gates.size();
  const int n = static_cast<int>(prep.registers[0].size());
  std::vector<int> current = prep.registers[0];
  for (std::size_t j = 1; j < prep.registers.size(); ++j) {
    auto bank = grow(circuit, n, "a" + std::to_string(j - 1) + "_");
    for (int i = 0; i < n; ++i) {
      circuit.add(Gate::mcx(
          bank[i], {Control{current[i], !disjunctive},
                    Control{prep.registers[j][i], !disjunctive}}));
      if (disjunctive) circuit.add(Gate::x(bank[i]));
    }
    current = std::move(bank);
  }
  const int ancillas =
      circuit.num_qubits - static_cast<int>(prep.registers.size()) * n;
  return BankReadout{std::move(circuit), std::move(current), ancillas, begin};
}

void check_two_registers(const MultiPrepared& prep, const char* rule) {
  if (prep.registers.size() != 2) {
    throw_error(ErrorCode::ArityMismatch,
                std::string(rule) + " combines exactly two registers");
  }
}

}  // namespace

BankReadout ccr_circuit(const MultiPrepared& prep) {
  return combine_cascade(prep, false);
}

BankReadout dcr_circuit(const MultiPrepared& prep) {
  return combine_cascade(prep, true);
}

BankReadout cecr_circuit(const MultiPrepared& prep) {
  check_two_registers(prep, "cecr");
  Circuit circuit = prep.circuit;
  const std::size_t begin = circuit.gates.size();
  const int n = static_cast<int>(prep.registers[0].size());
  for (int i = 0; i < n; ++i) {
    circuit.add(Gate::cnot(prep.registers[0][i], prep.registers[1][i]));
    circuit.add(Gate::x(prep.registers[1][i]));
  }
  return BankReadout{std::move(circuit), prep.registers[1], 0, begin};
}

BankReadout decr_circuit(const MultiPrepared& prep) {
  check_two_registers(prep, "decr");
  Circuit circuit = prep.circuit;
  const std::size_t begin = circuit.gates.size();
  const int n = static_cast<int>(prep.registers[0].size());
  for (int i = 0; i < n; ++i) {
    circuit.add(Gate::cnot(prep.registers[0][i], prep.registers[1][i]));
  }
  return BankReadout{std::move(circuit), prep.registers[1], 0, begin};
}

BankReadout alpha_entire_circuit(const MultiPrepared& prep, double alpha,
                                 AlphaKind kind) {
  check_two_registers(prep, "alpha_entire");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw_error(ErrorCode::InvalidArgument, "alpha must lie in [0, 1]");
  }
  Circuit circuit = prep.circuit;
  const std::size_t begin = circuit.gates.size();
  const int n = static_cast<int>(prep.registers[0].size());
  const auto& reg1 = prep.registers[0];
  const auto& reg2 = prep.registers[1];
  auto agree = grow(circuit, n, "a1_");   // per-element coincidence bank
  auto output = grow(circuit, n, "a2_");  // result bank

  const bool conj = kind == AlphaKind::Conjunctive;
  if (conj) {
    for (int i = 0; i < n; ++i) {
      circuit.add(Gate::x(reg1[i]));
      circuit.add(Gate::x(reg2[i]));
    }
  }
  // agree[i] records the case the rotation acts on: both-absent for the
  // conjunction (registers are inverted here), both-present for the
  // disjunction.
  for (int i = 0; i < n; ++i) {
    circuit.add(Gate::toffoli(reg1[i], reg2[i], agree[i]));
  }
  for (int i = 0; i < n; ++i) {
    circuit.add(Gate::cnot(reg1[i], output[i]));
    circuit.add(Gate::cnot(reg2[i], output[i]));
  }
  if (conj) {
    for (int i = 0; i < n; ++i) circuit.add(Gate::x(output[i]));
  }
  // Blend toward the alpha = 1 rule on the coincidence branch. At
  // alpha = 0 the rotation is the identity and the exclusive rule
  // remains; at alpha = 1 the branch is fully transferred.
  const double theta = 2.0 * std::acos(std::sqrt(1.0 - alpha));
  for (int i = 0; i < n; ++i) {
    circuit.add(Gate::mcry(output[i], theta, {Control{agree[i], true}}));
  }
  return BankReadout{std::move(circuit), std::move(output), 2 * n, begin};
}

namespace {

PartialCircuit make_partial(const PreparedMass& prep, double param,
                            const char* name) {
  if (!(param >= 0.0 && param <= 1.0)) {
    throw_error(ErrorCode::InvalidArgument,
                std::string(name) + " must lie in [0, 1]");
  }
  PartialCircuit partial;
  partial.base = prep.circuit;
  partial.source = prep.qubits;
  partial.operation_begin = partial.base.gates.size();
  const int n = static_cast<int>(prep.qubits.size());
  partial.adjusted = grow(partial.base, n, "a");
  partial.extraction = grow(partial.base, n, "b");
  partial.ancillas = 2 * n;
  return partial;
}

}  // namespace

PartialCircuit alpha_partial_circuit(const PreparedMass& m2, double alpha,
                                     AlphaKind kind) {
  PartialCircuit partial = make_partial(m2, alpha, "alpha");
  const int n = static_cast<int>(partial.source.size());
  const double theta = 2.0 * std::acos(std::sqrt(alpha));
  if (kind == AlphaKind::Conjunctive) {
    for (int i = 0; i < n; ++i) partial.base.add(Gate::x(partial.source[i]));
    for (int i = 0; i < n; ++i) {
      partial.base.add(Gate::mcry(partial.adjusted[i], theta,
                                  {Control{partial.source[i], true}}));
    }
    for (int i = 0; i < n; ++i) partial.base.add(Gate::x(partial.source[i]));
    partial.adjusted_for_members = false;
  } else {
    for (int i = 0; i < n; ++i) {
      partial.base.add(Gate::mcry(partial.adjusted[i], theta,
                                  {Control{partial.source[i], true}}));
    }
    for (int i = 0; i < n; ++i) partial.base.add(Gate::x(partial.adjusted[i]));
    partial.adjusted_for_members = true;
  }
  return partial;
}

PartialCircuit cer_circuit(const PreparedMass& prep, double beta) {
  PartialCircuit partial = make_partial(prep, beta, "beta");
  const int n = static_cast<int>(partial.source.size());
  const double theta = 2.0 * std::acos(std::sqrt(beta));
  for (int i = 0; i < n; ++i) {
    partial.base.add(Gate::mcry(partial.adjusted[i], theta,
                                {Control{partial.source[i], false}}));
  }
  for (int i = 0; i < n; ++i) partial.base.add(Gate::x(partial.adjusted[i]));
  partial.adjusted_for_members = true;
  return partial;
}

PartialCircuit crr_circuit(const PreparedMass& prep, double beta) {
  PartialCircuit partial = make_partial(prep, beta, "beta");
  const int n = static_cast<int>(partial.source.size());
  const double theta = 2.0 * std::acos(std::sqrt(beta));
  for (int i = 0; i < n; ++i) {
    partial.base.add(Gate::mcry(partial.adjusted[i], theta,
                                {Control{partial.source[i], true}}));
  }
  partial.adjusted_for_members = true;
  return partial;
}

std::vector<qsim::Gate> extraction_gates(const PartialCircuit& partial,
                                         SubsetIndex focal) {
  const int n = static_cast<int>(partial.source.size());
  std::vector<Gate> gates;
  gates.reserve(n);
  for (int i = 0; i < n; ++i) {
    const bool member = subset_contains(focal, i);
    const int source = member == partial.adjusted_for_members
                           ? partial.adjusted[i]
                           : partial.source[i];
    gates.push_back(Gate::cnot(source, partial.extraction[i]));
  }
  return gates;
}

qsim::Circuit with_extraction(const PartialCircuit& partial,
                              SubsetIndex focal) {
  Circuit circuit = partial.base;
  for (Gate& g : extraction_gates(partial, focal)) circuit.add(std::move(g));
  return circuit;
}

qsim::Circuit full_extraction_circuit(const PartialCircuit& partial) {
  const int n = static_cast<int>(partial.source.size());
  const SubsetIndex count = SubsetIndex{1} << n;
  Circuit circuit = partial.base;
  // One fresh bank per subset; the bank wired into the base stays idle.
  for (SubsetIndex focal = 0; focal < count; ++focal) {
    auto bank = grow(circuit, n, "b" + std::to_string(focal) + "_");
    for (int i = 0; i < n; ++i) {
      const bool member = subset_contains(focal, i);
      const int source = member == partial.adjusted_for_members
                             ? partial.adjusted[i]
                             : partial.source[i];
      circuit.add(Gate::cnot(source, bank[i]));
    }
  }
  return circuit;
}

Vector extract_vector(const PartialCircuit& partial,
                      const qsim::QuantumState& base_state,
                      SubsetIndex focal) {
  qsim::QuantumState state = base_state;
  for (const Gate& g : extraction_gates(partial, focal)) {
    qsim::apply_in_place(state, g);
  }
  return measured_masses(state, partial.extraction);
}

std::vector<Vector> extract_all_vectors(const PartialCircuit& partial) {
  const qsim::QuantumState base_state = qsim::run(partial.base);
  const SubsetIndex count = SubsetIndex{1}
                            << partial.source.size();
  std::vector<Vector> out;
  out.reserve(count);
  for (SubsetIndex focal = 0; focal < count; ++focal) {
    out.push_back(extract_vector(partial, base_state, focal));
  }
  return out;
}

namespace {

void check_product_layout(const PreparedMass& prep, int expected,
                          const char* what) {
  if (static_cast<int>(prep.qubits.size()) != expected) {
    throw_error(ErrorCode::NotAProductLayout,
                std::string(what) + ": register has " +
                    std::to_string(prep.qubits.size()) + " qubits, expected " +
                    std::to_string(expected));
  }
}

}  // namespace

BankReadout marginalize_circuit(const PreparedMass& joint,
                                const ProductFrame& pf, Side side) {
  check_product_layout(joint, pf.left().size() * pf.right().size(),
                       "marginalize");
  Circuit circuit = joint.circuit;
  const std::size_t begin = circuit.gates.size();
  const int out_size =
      side == Side::Left ? pf.left().size() : pf.right().size();
  const int other_size =
      side == Side::Left ? pf.right().size() : pf.left().size();
  auto bank = grow(circuit, out_size, "a");
  for (int e = 0; e < out_size; ++e) {
    std::vector<Control> controls;
    controls.reserve(other_size);
    for (int o = 0; o < other_size; ++o) {
      const int pos = side == Side::Left ? pf.pair_position(e, o)
                                         : pf.pair_position(o, e);
      controls.push_back(Control{joint.qubits[pos], false});
    }
    circuit.add(Gate::mcx(bank[e], std::move(controls)));
    circuit.add(Gate::x(bank[e]));
  }
  return BankReadout{std::move(circuit), std::move(bank), out_size, begin};
}

BankReadout vacuous_circuit(const PreparedMass& left, const ProductFrame& pf) {
  check_product_layout(left, pf.left().size(), "vacuous_extend");
  Circuit circuit = left.circuit;
  const std::size_t begin = circuit.gates.size();
  const int pairs = pf.left().size() * pf.right().size();
  auto bank = grow(circuit, pairs, "a");
  for (int i = 0; i < pf.left().size(); ++i) {
    for (int j = 0; j < pf.right().size(); ++j) {
      circuit.add(Gate::cnot(left.qubits[i], bank[pf.pair_position(i, j)]));
    }
  }
  return BankReadout{std::move(circuit), std::move(bank), pairs, begin};
}

BankReadout ballooning_circuit(const PreparedMass& conditional,
                               const ProductFrame& pf, SubsetIndex given) {
  check_product_layout(conditional, pf.left().size(), "ballooning_extend");
  if (given == 0) {
    throw_error(ErrorCode::EmptyConditioningSet,
                "conditioning set must be nonempty");
  }
  if (given > pf.right().full_set()) {
    throw_error(ErrorCode::InvalidArgument,
                "conditioning set out of range for the right frame");
  }
  Circuit circuit = conditional.circuit;
  const std::size_t begin = circuit.gates.size();
  const int pairs = pf.left().size() * pf.right().size();
  auto bank = grow(circuit, pairs, "a");
  for (int j = 0; j < pf.right().size(); ++j) {
    if (subset_contains(given, j)) {
      for (int i = 0; i < pf.left().size(); ++i) {
        circuit.add(
            Gate::cnot(conditional.qubits[i], bank[pf.pair_position(i, j)]));
      }
    } else {
      for (int i = 0; i < pf.left().size(); ++i) {
        circuit.add(Gate::x(bank[pf.pair_position(i, j)]));
      }
    }
  }
  return BankReadout{std::move(circuit), std::move(bank), pairs, begin};
}

GateCountReport gate_count(const qsim::Circuit& circuit, int ancillas,
                           std::size_t first_gate) {
  GateCountReport report;
  report.ancillas = ancillas;
  for (std::size_t i = first_gate; i < circuit.gates.size(); ++i) {
    const Gate& g = circuit.gates[i];
    switch (g.kind) {
      case qsim::GateKind::X:
        ++report.x;
        break;
      case qsim::GateKind::RY:
        ++report.ry;
        break;
      case qsim::GateKind::MCRY:
        ++report.cry;
        break;
      case qsim::GateKind::MCX:
        if (g.controls.size() <= 1) {
          ++report.cnot;
        } else {
          ++report.toffoli;
        }
        break;
    }
  }
  return report;
}

Vector measured_masses(const qsim::QuantumState& state,
                       std::span<const int> bank) {
#ifndef NDEBUG
  // The whole gate set is real; complex leakage means a broken gate.
  assert(state.amplitudes.imag().cwiseAbs().maxCoeff() < 1e-9);
#endif
  return qsim::probabilities(state, bank);
}

}  // namespace tbmq::qc
