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

#ifndef TBMQ_IO_HPP
#define TBMQ_IO_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "tbmq/mass.hpp"
#include "tbmq/product_space.hpp"
#include "tbmq/qc/builders.hpp"

namespace tbmq::io {

using Json = nlohmann::ordered_json;

/// A mass function loaded from disk, with the product-frame metadata
/// when the document declared "left"/"right" frames.
struct MassDocument {
  MassFunction mass;
  std::optional<ProductFrame> product;
};

/// Accepted shapes (subset keys are comma-joined labels, "" = empty set):
///   {"frame": ["w1","w2"], "masses": {"": 0.2, "w1,w2": 0.8}}
///   {"frame": ["w1","w2"], "vector": [0.2, 0, 0, 0.8]}
///   {"left": ["w1"], "right": ["t1","t2"], "masses": {"w1*t1": 1.0}}
/// Structural problems throw ParseError; value problems (unknown label,
/// negative mass, bad sum) surface as the usual domain errors.
MassDocument parse_mass_document(const Json& doc);
MassDocument load_mass_document(const std::string& path);

/// Focal sets only, keys sorted by subset index, 12 significant digits.
Json mass_to_json(const MassFunction& m);
Json mass_to_json(const ProductFrame& pf, const MassFunction& joint);

/// Dense label -> value map over all subsets, index order.
Json dense_vector_json(const FrameOfDiscernment& frame, const Vector& values);

/// Label -> value map over elements (contour, betp, ...).
Json element_vector_json(const FrameOfDiscernment& frame,
                         const Vector& values);

Json gate_count_json(const qc::GateCountReport& report);

/// Rounds to 12 significant digits for stable document emission.
double round_sig(double value);

}  // namespace tbmq::io

#endif  // TBMQ_IO_HPP
