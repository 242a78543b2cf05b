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

#include "tbmq/qsim/simulate.hpp"

#include <cmath>
#include <random>

namespace tbmq::qsim {

namespace {

constexpr int kMaxQubits = 24;  // 2^24 complex amplitudes = 256 MiB

void check_width(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw_error(ErrorCode::QubitOutOfRange,
                "simulator supports 1.." + std::to_string(kMaxQubits) +
                    " qubits, got " + std::to_string(num_qubits));
  }
}

void check_gate(const Gate& gate, int num_qubits) {
  auto in_range = [num_qubits](int q) { return q >= 0 && q < num_qubits; };
  if (!in_range(gate.target)) {
    throw_error(ErrorCode::QubitOutOfRange,
                "gate target " + std::to_string(gate.target) +
                    " outside 0.." + std::to_string(num_qubits - 1));
  }
  for (const Control& c : gate.controls) {
    if (!in_range(c.qubit)) {
      throw_error(ErrorCode::QubitOutOfRange,
                  "gate control " + std::to_string(c.qubit) + " outside 0.." +
                      std::to_string(num_qubits - 1));
    }
    if (c.qubit == gate.target) {
      throw_error(ErrorCode::InvalidArgument,
                  "gate target may not also be a control");
    }
  }
  if ((gate.kind == GateKind::RY || gate.kind == GateKind::MCRY) &&
      !std::isfinite(gate.theta)) {
    throw_error(ErrorCode::InvalidArgument, "rotation angle must be finite");
  }
}

}  // namespace

Circuit& Circuit::add(Gate gate) {
  check_gate(gate, num_qubits);
  gates.push_back(std::move(gate));
  return *this;
}

QuantumState zero_state(int num_qubits) {
  check_width(num_qubits);
  QuantumState state{num_qubits, Eigen::VectorXcd::Zero(Eigen::Index{1}
                                                        << num_qubits)};
  state.amplitudes(0) = 1.0;
  return state;
}

QuantumState basis_state(std::string_view bits) {
  check_width(static_cast<int>(bits.size()));
  std::uint64_t index = 0;
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] == '1') {
      index |= std::uint64_t{1} << j;
    } else if (bits[j] != '0') {
      throw_error(ErrorCode::InvalidArgument,
                  "basis string must be over {0,1}");
    }
  }
  QuantumState state{static_cast<int>(bits.size()),
                     Eigen::VectorXcd::Zero(Eigen::Index{1} << bits.size())};
  state.amplitudes(static_cast<Eigen::Index>(index)) = 1.0;
  return state;
}

std::string ket_label(std::uint64_t index, int width) {
  std::string out(width, '0');
  for (int j = 0; j < width; ++j) {
    if ((index >> j) & 1u) out[j] = '1';
  }
  return out;
}

void apply_in_place(QuantumState& state, const Gate& gate) {
  check_gate(gate, state.num_qubits);

  // 2x2 action on the target bit. The RY convention follows the
  // rotation matrix [[cos, -sin], [sin, cos]] of theta/2, so
  // RY(theta)|1> = -sin(theta/2)|0> + cos(theta/2)|1>.
  double g00 = 0.0, g01 = 1.0, g10 = 1.0, g11 = 0.0;  // X action
  if (gate.kind == GateKind::RY || gate.kind == GateKind::MCRY) {
    const double c = std::cos(gate.theta / 2.0);
    const double s = std::sin(gate.theta / 2.0);
    g00 = c, g01 = -s, g10 = s, g11 = c;
  }

  const Eigen::Index dim = state.amplitudes.size();
  const Eigen::Index target_bit = Eigen::Index{1} << gate.target;
  auto& amp = state.amplitudes;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i & target_bit) continue;
    bool fires = true;
    for (const Control& c : gate.controls) {
      const bool bit = (i >> c.qubit) & 1;
      if (bit != c.positive) {
        fires = false;
        break;
      }
    }
    if (!fires) continue;
    const Eigen::Index j = i | target_bit;
    const std::complex<double> lo = amp(i);
    const std::complex<double> hi = amp(j);
    amp(i) = g00 * lo + g01 * hi;
    amp(j) = g10 * lo + g11 * hi;
  }
}

QuantumState apply(QuantumState state, const Gate& gate) {
  apply_in_place(state, gate);
  return state;
}

QuantumState run(const Circuit& circuit) {
  return run_from(zero_state(circuit.num_qubits), circuit);
}

QuantumState run(const Circuit& circuit, std::string_view initial) {
  if (static_cast<int>(initial.size()) != circuit.num_qubits) {
    throw_error(ErrorCode::InvalidArgument,
                "initial basis string length " +
                    std::to_string(initial.size()) + " does not match " +
                    std::to_string(circuit.num_qubits) + " qubits");
  }
  return run_from(basis_state(initial), circuit);
}

QuantumState run_from(QuantumState state, const Circuit& circuit,
                      std::size_t first_gate) {
  if (state.num_qubits != circuit.num_qubits) {
    throw_error(ErrorCode::InvalidArgument,
                "state width does not match circuit width");
  }
  for (std::size_t g = first_gate; g < circuit.gates.size(); ++g) {
    apply_in_place(state, circuit.gates[g]);
  }
  return state;
}

Eigen::VectorXd probabilities(const QuantumState& state,
                              std::span<const int> qubits) {
  for (std::size_t a = 0; a < qubits.size(); ++a) {
    if (qubits[a] < 0 || qubits[a] >= state.num_qubits) {
      throw_error(ErrorCode::QubitOutOfRange,
                  "readout qubit " + std::to_string(qubits[a]) +
                      " out of range");
    }
    for (std::size_t b = a + 1; b < qubits.size(); ++b) {
      if (qubits[a] == qubits[b]) {
        throw_error(ErrorCode::DuplicateQubit,
                    "readout qubit " + std::to_string(qubits[a]) +
                        " listed twice");
      }
    }
  }
  Eigen::VectorXd out =
      Eigen::VectorXd::Zero(Eigen::Index{1} << qubits.size());
  const Eigen::Index dim = state.amplitudes.size();
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double p = std::norm(state.amplitudes(i));
    if (p == 0.0) continue;
    Eigen::Index outcome = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k) {
      outcome |= ((i >> qubits[k]) & 1) << k;
    }
    out(outcome) += p;
  }
  return out;
}

Eigen::VectorXd probabilities(const QuantumState& state) {
  return state.amplitudes.cwiseAbs2();
}

std::vector<std::int64_t> sample(const QuantumState& state,
                                 std::span<const int> qubits,
                                 std::int64_t shots, std::uint64_t seed) {
  if (shots < 1) {
    throw_error(ErrorCode::InvalidArgument, "shots must be >= 1");
  }
  const Eigen::VectorXd probs = probabilities(state, qubits);
  Eigen::VectorXd cumulative(probs.size());
  double acc = 0.0;
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    acc += probs(i);
    cumulative(i) = acc;
  }

  // Hand-rolled inverse-CDF draw: std::discrete_distribution is
  // implementation-defined, this is reproducible everywhere.
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> histogram(probs.size(), 0);
  for (std::int64_t s = 0; s < shots; ++s) {
    const double u =
        static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    Eigen::Index lo = 0, hi = probs.size() - 1;
    while (lo < hi) {
      const Eigen::Index mid = (lo + hi) / 2;
      if (cumulative(mid) > u) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    ++histogram[lo];
  }
  return histogram;
}

}  // namespace tbmq::qsim
