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

#ifndef TBMQ_QC_BUILDERS_HPP
#define TBMQ_QC_BUILDERS_HPP

#include <span>
#include <vector>

#include "tbmq/boolean_expr.hpp"
#include "tbmq/credal.hpp"
#include "tbmq/mass.hpp"
#include "tbmq/product_space.hpp"
#include "tbmq/qsim/simulate.hpp"

namespace tbmq::qc {

// Every builder compiles one belief operation into a circuit whose
// measured probabilities reproduce the classical result exactly (up to
// floating point). The qubit of element i is always bit i of the
// readout index, so measured vectors align with subset indexing without
// any reshuffling.

/// A register whose basis-state probabilities equal a mass function.
struct PreparedMass {
  qsim::Circuit circuit;
  std::vector<int> qubits;  // qubits[i] carries element i
};

/// General state preparation: n X gates, one RY, and a binary tree of
/// up to 2^n - 2 multi-controlled RY gates. Rotations with angle zero
/// (empty subtrees) are skipped.
PreparedMass prepare_mfqs(const MassFunction& m);

/// Product-form preparation for poss-transferable mass functions:
/// exactly n single-qubit RY gates, no entanglement. `pi` values must
/// lie in [0, 1].
PreparedMass prepare_poss_mfqs(const ContourFunction& pi);

struct ScalarReadout {
  qsim::Circuit circuit;
  int ancilla;
  int ancillas = 1;
  // First gate belonging to the operation itself; everything before it
  // is state preparation. Gate-count laws apply to this tail.
  std::size_t operation_begin = 0;
};

/// Appends one C^|F|-NOT with positive controls on the elements of
/// `focal`; Prob(ancilla = 1) = q(focal). Throws EmptyControlSet on the
/// empty set.
ScalarReadout extract_q(const PreparedMass& prep, SubsetIndex focal);

/// Negative controls on the complement; Prob(ancilla = 1) = b(focal).
/// Throws EmptyControlSet on the full set.
ScalarReadout extract_b(const PreparedMass& prep, SubsetIndex focal);

struct BankReadout {
  qsim::Circuit circuit;
  std::vector<int> bank;  // bank[i] carries element i of the result
  int ancillas = 0;
  std::size_t operation_begin = 0;  // see ScalarReadout
};

/// Fans the register out to n ancillas with CNOTs; per-ancilla marginals
/// are the contour function.
BankReadout plausibility_fanout(const PreparedMass& prep);

/// Reads pl(w_i) = Prob(bank[i] = 1) and normalizes classically.
/// Throws ZeroContour when nothing is plausible.
Vector decode_pl_transform(const qsim::QuantumState& state,
                           std::span<const int> bank);

/// Several mass functions prepared side by side; register j occupies
/// qubits [j*n, (j+1)*n).
struct MultiPrepared {
  qsim::Circuit circuit;
  std::vector<std::vector<int>> registers;
};

MultiPrepared prepare_registers(std::span<const MassFunction> masses);

/// Compiles a layered Boolean expression over the prepared registers.
/// Each operation component writes an n-qubit ancilla bank: AND uses one
/// C^k-NOT per element, OR flips all control polarities and appends X
/// gates on the targets. Negations are absorbed into the consuming
/// component's control polarities (a top-level negation costs n X
/// gates). Throws AncillaBudgetExceeded past the simulator width.
BankReadout bacr_circuit(const MultiPrepared& prep,
                         const BooleanExpression& expr);

/// Multi-source conjunctive combination as a cascade of pairwise
/// intersections: (k-1) n Toffoli gates.
BankReadout ccr_circuit(const MultiPrepared& prep);

/// Disjunctive cascade: (k-1) n negative-control Toffolis plus X layers.
BankReadout dcr_circuit(const MultiPrepared& prep);

/// Ancilla-free exclusive rules over exactly two registers; the result
/// is written onto register 2 in place.
BankReadout cecr_circuit(const MultiPrepared& prep);
BankReadout decr_circuit(const MultiPrepared& prep);

/// Whole alpha-junction on 2n ancillas: one bank records the per-element
/// agreement case, the other accumulates the boundary-rule output, and a
/// trailing controlled-RY(2 arccos sqrt(1 - alpha)) blends the two.
/// Exactly 4n control-type gates.
BankReadout alpha_entire_circuit(const MultiPrepared& prep, double alpha,
                                 AlphaKind kind);

/// Base circuit of the partial alpha-junction / contour revisions: the
/// adjusted bank holds the rotated copy and a second bank is reserved
/// for per-subset extraction. One simulated base state serves every
/// subset (see extract_vector).
struct PartialCircuit {
  qsim::Circuit base;
  std::vector<int> source;
  std::vector<int> adjusted;
  std::vector<int> extraction;
  // Membership side that reads the adjusted bank during extraction:
  // true = elements of the subset, false = their complement.
  bool adjusted_for_members = true;
  int ancillas = 0;
  std::size_t operation_begin = 0;  // see ScalarReadout
};

PartialCircuit alpha_partial_circuit(const PreparedMass& m2, double alpha,
                                     AlphaKind kind);
PartialCircuit cer_circuit(const PreparedMass& prep, double beta);
PartialCircuit crr_circuit(const PreparedMass& prep, double beta);

/// The n CNOTs that copy the subset-dependent mix of source/adjusted
/// qubits into the extraction bank.
std::vector<qsim::Gate> extraction_gates(const PartialCircuit& partial,
                                         SubsetIndex focal);

/// Base circuit plus the extraction for one subset.
qsim::Circuit with_extraction(const PartialCircuit& partial,
                              SubsetIndex focal);

/// All 2^n extractions into separate banks; used for gate accounting,
/// not simulation.
qsim::Circuit full_extraction_circuit(const PartialCircuit& partial);

/// Applies one extraction to a copy of the simulated base state and
/// measures the extraction bank.
Vector extract_vector(const PartialCircuit& partial,
                      const qsim::QuantumState& base_state, SubsetIndex focal);

/// extract_vector for every subset, reusing one base simulation.
std::vector<Vector> extract_all_vectors(const PartialCircuit& partial);

/// Projection of a prepared joint register onto one side: one
/// negative-control C^|Theta|-NOT plus X per output element.
BankReadout marginalize_circuit(const PreparedMass& joint,
                                const ProductFrame& pf, Side side);

/// Cylinder lift: |Omega x Theta| CNOT fan-outs.
BankReadout vacuous_circuit(const PreparedMass& left, const ProductFrame& pf);

/// Conditional embedding: CNOTs into the columns of `given`, X on the
/// rest. Throws EmptyConditioningSet.
BankReadout ballooning_circuit(const PreparedMass& conditional,
                               const ProductFrame& pf, SubsetIndex given);

/// Per-kind gate tally. A C^k-NOT with k >= 2 counts as one
/// Toffoli-class gate; controlled rotations of any arity count as cry.
struct GateCountReport {
  long x = 0;
  long ry = 0;
  long cry = 0;
  long cnot = 0;
  long toffoli = 0;
  int ancillas = 0;

  long control_gates() const noexcept { return cry + cnot + toffoli; }
  friend bool operator==(const GateCountReport&,
                         const GateCountReport&) = default;
};

/// Tallies gates from `first_gate` on; pass a readout's
/// operation_begin to count the operation without its preparation.
GateCountReport gate_count(const qsim::Circuit& circuit, int ancillas = 0,
                           std::size_t first_gate = 0);

/// Measured probabilities over a bank, i.e. the mass vector the circuit
/// encodes there.
Vector measured_masses(const qsim::QuantumState& state,
                       std::span<const int> bank);

}  // namespace tbmq::qc

#endif  // TBMQ_QC_BUILDERS_HPP
