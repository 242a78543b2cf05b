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

#ifndef TBMQ_QSIM_SIMULATE_HPP
#define TBMQ_QSIM_SIMULATE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tbmq/qsim/circuit.hpp"

namespace tbmq::qsim {

/// Dense statevector. Qubit j addresses bit j of the basis index
/// (least significant bit first). Basis strings and ket labels list
/// qubit 0 first, so basis_state("101") sets qubits 0 and 2.
struct QuantumState {
  int num_qubits = 0;
  Eigen::VectorXcd amplitudes;
};

QuantumState zero_state(int num_qubits);
QuantumState basis_state(std::string_view bits);

/// Little-endian label of a basis index: character j is bit j.
std::string ket_label(std::uint64_t index, int width);

/// Applies one gate; only amplitude pairs differing in the target bit
/// are touched, gated by the control polarities.
void apply_in_place(QuantumState& state, const Gate& gate);
QuantumState apply(QuantumState state, const Gate& gate);

/// Left-fold of apply over the circuit, starting from |0...0> or the
/// given basis string / state.
QuantumState run(const Circuit& circuit);
QuantumState run(const Circuit& circuit, std::string_view initial);
QuantumState run_from(QuantumState state, const Circuit& circuit,
                      std::size_t first_gate = 0);

/// Marginal distribution over the listed qubits; the first listed qubit
/// is the lowest-order bit of the outcome index. Throws DuplicateQubit.
Eigen::VectorXd probabilities(const QuantumState& state,
                              std::span<const int> qubits);

/// All qubits, in wire order: elementwise |amplitude|^2.
Eigen::VectorXd probabilities(const QuantumState& state);

/// Multinomial histogram over the listed qubits, dense by outcome index.
/// Identical seeds give identical histograms on any platform.
std::vector<std::int64_t> sample(const QuantumState& state,
                                 std::span<const int> qubits,
                                 std::int64_t shots, std::uint64_t seed);

}  // namespace tbmq::qsim

#endif  // TBMQ_QSIM_SIMULATE_HPP
