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

#ifndef TBMQ_QSIM_TEXT_HPP
#define TBMQ_QSIM_TEXT_HPP

#include <string>
#include <string_view>

#include "tbmq/qsim/circuit.hpp"

namespace tbmq::qsim {

/// Line-oriented dump, one gate per line:
///
///   qubits 7
///   labels q0_1,q1_1,a0
///   X target=0
///   RY target=2 theta=1.5707963267948966
///   MCX targets=7 controls=+0,+3,-5
///   MCRY target=3 theta=0.5 controls=+1
///
/// Angles are printed with enough digits for an exact float roundtrip.
std::string to_text(const Circuit& circuit);

/// Inverse of to_text; '#' starts a comment. Throws ParseError.
Circuit circuit_from_text(std::string_view text);

}  // namespace tbmq::qsim

#endif  // TBMQ_QSIM_TEXT_HPP
