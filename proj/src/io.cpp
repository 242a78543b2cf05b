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

#include "tbmq/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace tbmq::io {

namespace {

std::vector<std::string> parse_labels(const Json& node, const char* field) {
  if (!node.is_array() || node.empty()) {
    throw_error(ErrorCode::ParseError,
                std::string("'") + field + "' must be a nonempty array");
  }
  std::vector<std::string> labels;
  for (const auto& item : node) {
    if (!item.is_string()) {
      throw_error(ErrorCode::ParseError,
                  std::string("'") + field + "' entries must be strings");
    }
    labels.push_back(item.get<std::string>());
  }
  return labels;
}

Vector parse_masses(const Json& doc, const FrameOfDiscernment& frame) {
  const bool has_map = doc.contains("masses");
  const bool has_vector = doc.contains("vector");
  if (has_map == has_vector) {
    throw_error(ErrorCode::ParseError,
                "document needs exactly one of 'masses' or 'vector'");
  }
  Vector v = Vector::Zero(frame.subset_count());
  if (has_map) {
    const Json& masses = doc.at("masses");
    if (!masses.is_object()) {
      throw_error(ErrorCode::ParseError, "'masses' must be an object");
    }
    for (const auto& [key, value] : masses.items()) {
      if (!value.is_number()) {
        throw_error(ErrorCode::ParseError,
                    "mass of '" + key + "' must be a number");
      }
      v(static_cast<Eigen::Index>(frame.subset_from_key(key))) +=
          value.get<double>();
    }
  } else {
    const Json& vec = doc.at("vector");
    if (!vec.is_array() ||
        vec.size() != static_cast<std::size_t>(frame.subset_count())) {
      throw_error(ErrorCode::ParseError,
                  "'vector' must be an array of 2^n numbers");
    }
    for (std::size_t i = 0; i < vec.size(); ++i) {
      if (!vec[i].is_number()) {
        throw_error(ErrorCode::ParseError, "'vector' entries must be numbers");
      }
      v(static_cast<Eigen::Index>(i)) = vec[i].get<double>();
    }
  }
  return v;
}

}  // namespace

MassDocument parse_mass_document(const Json& doc) {
  if (!doc.is_object()) {
    throw_error(ErrorCode::ParseError, "mass document must be a JSON object");
  }
  if (doc.contains("left") || doc.contains("right")) {
    if (!doc.contains("left") || !doc.contains("right")) {
      throw_error(ErrorCode::ParseError,
                  "joint documents need both 'left' and 'right'");
    }
    ProductFrame pf(FrameOfDiscernment(parse_labels(doc.at("left"), "left")),
                    FrameOfDiscernment(parse_labels(doc.at("right"), "right")));
    Vector v = parse_masses(doc, pf.joint());
    return MassDocument{MassFunction(pf.joint(), std::move(v)), std::move(pf)};
  }
  if (!doc.contains("frame")) {
    throw_error(ErrorCode::ParseError, "mass document missing 'frame'");
  }
  FrameOfDiscernment frame(parse_labels(doc.at("frame"), "frame"));
  Vector v = parse_masses(doc, frame);
  return MassDocument{MassFunction(std::move(frame), std::move(v)),
                      std::nullopt};
}

MassDocument load_mass_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw_error(ErrorCode::ParseError, "cannot open " + path);
  }
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw_error(ErrorCode::ParseError,
                path + ": " + std::string(e.what()));
  }
  return parse_mass_document(doc);
}

double round_sig(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

namespace {

Json focal_map(const FrameOfDiscernment& frame, const Vector& values) {
  Json map = Json::object();
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) == 0.0) continue;
    map[frame.subset_key(static_cast<SubsetIndex>(i))] = round_sig(values(i));
  }
  return map;
}

}  // namespace

Json mass_to_json(const MassFunction& m) {
  Json doc = Json::object();
  doc["frame"] = m.frame().elements();
  doc["masses"] = focal_map(m.frame(), m.values());
  return doc;
}

Json mass_to_json(const ProductFrame& pf, const MassFunction& joint) {
  if (joint.frame() != pf.joint()) {
    throw_error(ErrorCode::NotAProductFrame,
                "mass function does not live on the joint frame");
  }
  Json doc = Json::object();
  doc["left"] = pf.left().elements();
  doc["right"] = pf.right().elements();
  doc["masses"] = focal_map(pf.joint(), joint.values());
  return doc;
}

Json dense_vector_json(const FrameOfDiscernment& frame, const Vector& values) {
  Json map = Json::object();
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    map[frame.subset_key(static_cast<SubsetIndex>(i))] = round_sig(values(i));
  }
  return map;
}

Json element_vector_json(const FrameOfDiscernment& frame,
                         const Vector& values) {
  Json map = Json::object();
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    map[frame.element(static_cast<int>(i))] = round_sig(values(i));
  }
  return map;
}

Json gate_count_json(const qc::GateCountReport& report) {
  Json doc = Json::object();
  doc["toffoli"] = report.toffoli;
  doc["cnot"] = report.cnot;
  doc["cry"] = report.cry;
  doc["ry"] = report.ry;
  doc["x"] = report.x;
  doc["ancillas"] = report.ancillas;
  return doc;
}

}  // namespace tbmq::io
