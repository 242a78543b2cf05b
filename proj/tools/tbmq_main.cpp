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

// Command-line front end. Every evidential operation runs classically
// and, unless switched off, again as a simulated quantum circuit; the
// two vectors are compared and the run reports PASS/FAIL.
//
// Exit codes: 0 pass, 1 divergence, 2 parse error, 3 domain error.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tbmq/credal.hpp"
#include "tbmq/fixtures.hpp"
#include "tbmq/io.hpp"
#include "tbmq/product_space.hpp"
#include "tbmq/qc/builders.hpp"
#include "tbmq/qsim/text.hpp"
#include "tbmq/transforms.hpp"

namespace {

using tbmq::AlphaKind;
using tbmq::ErrorCode;
using tbmq::FrameOfDiscernment;
using tbmq::MassFunction;
using tbmq::ProductFrame;
using tbmq::Side;
using tbmq::SubsetIndex;
using tbmq::Vector;
using tbmq::io::Json;

constexpr double kExactPassTolerance = 1e-9;

int g_exit_status = 0;  // raised to 1 on divergence failures

bool g_pretty = false;

std::uint64_t resolve_seed(std::uint64_t cli_seed) {
  if (const char* env = std::getenv("TBMQ_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return cli_seed;
}

struct QuantumMode {
  bool enabled = true;
  std::int64_t shots = 0;  // 0 = exact statevector readout
};

QuantumMode parse_quantum_mode(const std::string& text) {
  if (text == "exact") return QuantumMode{true, 0};
  if (text == "off") return QuantumMode{false, 0};
  if (text.rfind("shots=", 0) == 0) {
    const long long shots = std::atoll(text.c_str() + 6);
    if (shots < 1) {
      tbmq::throw_error(ErrorCode::InvalidArgument,
                        "--quantum shots=N needs N >= 1");
    }
    return QuantumMode{true, shots};
  }
  tbmq::throw_error(ErrorCode::InvalidArgument,
                    "--quantum must be exact, off or shots=N");
}

/// Largest absolute entry difference between two aligned vectors.
double divergence(const Vector& a, const Vector& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

std::string format_err(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", value);
  return buf;
}

/// Sampled path acceptance: every frequency within three multinomial
/// standard deviations of the exact probability.
bool within_three_sigma(const Vector& exact, const Vector& sampled,
                        std::int64_t shots) {
  for (Eigen::Index i = 0; i < exact.size(); ++i) {
    const double p = exact(i);
    const double band =
        3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(shots)) + 1e-12;
    if (std::abs(sampled(i) - p) > band) return false;
  }
  return true;
}

struct RunReport {
  explicit RunReport(FrameOfDiscernment f) : frame(std::move(f)) {}

  std::string operation;
  FrameOfDiscernment frame;
  Vector classical;
  std::optional<Vector> quantum;
  std::optional<tbmq::qc::GateCountReport> counts;
  std::optional<int> expr_layers;
  std::int64_t shots = 0;
  double wall_seconds = 0.0;
  bool pass = true;

  double max_divergence() const {
    return quantum ? divergence(classical, *quantum) : 0.0;
  }
};

void print_pretty_report(const RunReport& report) {
  std::fprintf(stderr, "%-28s %s\n", "operation", report.operation.c_str());
  std::fprintf(stderr, "%-12s %14s %14s\n", "subset", "classical",
               report.quantum ? (report.shots ? "sampled" : "quantum") : "-");
  for (Eigen::Index i = 0; i < report.classical.size(); ++i) {
    const std::string key =
        report.frame.subset_key(static_cast<SubsetIndex>(i));
    if (report.quantum) {
      std::fprintf(stderr, "%-12s %14.9f %14.9f\n",
                   key.empty() ? "{}" : key.c_str(), report.classical(i),
                   (*report.quantum)(i));
    } else {
      std::fprintf(stderr, "%-12s %14.9f\n", key.empty() ? "{}" : key.c_str(),
                   report.classical(i));
    }
  }
  if (report.quantum) {
    std::fprintf(stderr, "max divergence %.3e  ->  %s\n",
                 report.max_divergence(), report.pass ? "PASS" : "FAIL");
  }
}

Json report_json(const RunReport& report) {
  Json doc = Json::object();
  doc["operation"] = report.operation;
  doc["frame"] = report.frame.elements();
  doc["classical"] = tbmq::io::dense_vector_json(report.frame,
                                                 report.classical);
  if (report.quantum) {
    doc["quantum"] =
        tbmq::io::dense_vector_json(report.frame, *report.quantum);
    doc["max_abs_divergence"] = report.max_divergence();
    doc["status"] = report.pass ? "PASS" : "FAIL";
  } else {
    doc["quantum"] = nullptr;
    doc["status"] = "CLASSICAL_ONLY";
  }
  doc["shots"] = report.shots;
  if (report.counts) doc["gate_counts"] = tbmq::io::gate_count_json(*report.counts);
  if (report.expr_layers) doc["expr_layers"] = *report.expr_layers;
  doc["wall_time_s"] = report.wall_seconds;
  return doc;
}

void finish_report(RunReport& report, const QuantumMode& mode) {
  if (!report.quantum) return;
  if (mode.shots > 0) {
    report.pass =
        within_three_sigma(report.classical, *report.quantum, mode.shots);
  } else {
    report.pass = report.max_divergence() < kExactPassTolerance;
  }
  if (!report.pass) g_exit_status = std::max(g_exit_status, 1);
}

void dump_circuit(const std::string& path, const tbmq::qsim::Circuit& circuit) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) {
    tbmq::throw_error(ErrorCode::InvalidArgument, "cannot write " + path);
  }
  out << tbmq::qsim::to_text(circuit);
}

/// Runs a built circuit and reads the output bank, exact or sampled.
Vector read_bank(const tbmq::qsim::Circuit& circuit,
                 const std::vector<int>& bank, const QuantumMode& mode,
                 std::uint64_t seed) {
  const tbmq::qsim::QuantumState state = tbmq::qsim::run(circuit);
  if (mode.shots == 0) return tbmq::qc::measured_masses(state, bank);
  const auto histogram = tbmq::qsim::sample(state, bank, mode.shots, seed);
  Vector freq(static_cast<Eigen::Index>(histogram.size()));
  for (std::size_t i = 0; i < histogram.size(); ++i) {
    freq(static_cast<Eigen::Index>(i)) =
        static_cast<double>(histogram[i]) / static_cast<double>(mode.shots);
  }
  return freq;
}

void emit_report(RunReport& report, const QuantumMode& mode) {
  finish_report(report, mode);
  if (g_pretty) print_pretty_report(report);
  std::cout << report_json(report).dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// transform

void cmd_transform(const std::string& path, const std::string& to) {
  const MassFunction m = tbmq::io::load_mass_document(path).mass;
  Json doc = Json::object();
  doc["frame"] = m.frame().elements();
  doc["to"] = to;
  if (to == "bel") {
    doc["values"] =
        tbmq::io::dense_vector_json(m.frame(), tbmq::to_bel(m).values);
  } else if (to == "pl") {
    doc["values"] =
        tbmq::io::dense_vector_json(m.frame(), tbmq::to_pl(m).values);
  } else if (to == "q") {
    doc["values"] =
        tbmq::io::dense_vector_json(m.frame(), tbmq::to_q(m).values);
  } else if (to == "b") {
    doc["values"] =
        tbmq::io::dense_vector_json(m.frame(), tbmq::to_b(m).values);
  } else if (to == "betp") {
    doc["values"] = tbmq::io::element_vector_json(m.frame(), tbmq::betp(m));
  } else if (to == "plp") {
    doc["values"] =
        tbmq::io::element_vector_json(m.frame(), tbmq::pl_transform(m));
  } else if (to == "contour") {
    doc["values"] =
        tbmq::io::element_vector_json(m.frame(), tbmq::contour(m).values);
  } else {
    tbmq::throw_error(ErrorCode::InvalidArgument,
                      "--to must be bel|pl|q|b|betp|plp|contour");
  }
  std::cout << doc.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// combine

struct CombineOptions {
  std::vector<std::string> files;
  std::string rule;
  std::string expr;
  double alpha = -1.0;
  std::string quantum = "exact";
  std::string dump;
  std::uint64_t seed = 0;
};

void cmd_combine(const CombineOptions& opt) {
  const QuantumMode mode = parse_quantum_mode(opt.quantum);
  std::vector<MassFunction> inputs;
  for (const auto& f : opt.files) {
    inputs.push_back(tbmq::io::load_mass_document(f).mass);
  }
  if (inputs.size() < 2) {
    tbmq::throw_error(ErrorCode::ArityMismatch,
                      "combine needs at least two inputs");
  }
  if (opt.rule.empty() == opt.expr.empty()) {
    tbmq::throw_error(ErrorCode::InvalidArgument,
                      "pass exactly one of --rule or --expr");
  }

  const auto t0 = std::chrono::steady_clock::now();
  RunReport report(inputs[0].frame());

  auto pairwise_only = [&](const char* rule) {
    if (inputs.size() != 2) {
      tbmq::throw_error(ErrorCode::ArityMismatch,
                        std::string(rule) + " combines exactly two inputs");
    }
  };
  auto need_alpha = [&] {
    if (!(opt.alpha >= 0.0 && opt.alpha <= 1.0)) {
      tbmq::throw_error(ErrorCode::InvalidArgument,
                        "--alpha must be given in [0, 1] for alpha rules");
    }
  };

  // Classical result.
  std::optional<MassFunction> classical;
  if (!opt.expr.empty()) {
    const auto expr = tbmq::BooleanExpression::parse(opt.expr);
    classical = tbmq::bacr(inputs, expr);
    report.operation = "combine/expr " + expr.to_string();
    report.expr_layers = expr.layer_count();
  } else if (opt.rule == "ccr" || opt.rule == "dcr") {
    classical = inputs[0];
    for (std::size_t j = 1; j < inputs.size(); ++j) {
      classical = opt.rule == "ccr" ? tbmq::ccr(*classical, inputs[j])
                                    : tbmq::dcr(*classical, inputs[j]);
    }
    report.operation = "combine/" + opt.rule;
  } else if (opt.rule == "cecr" || opt.rule == "decr") {
    pairwise_only(opt.rule.c_str());
    classical = opt.rule == "cecr" ? tbmq::cecr(inputs[0], inputs[1])
                                   : tbmq::decr(inputs[0], inputs[1]);
    report.operation = "combine/" + opt.rule;
  } else if (opt.rule == "alpha-conj" || opt.rule == "alpha-disj") {
    pairwise_only(opt.rule.c_str());
    need_alpha();
    const AlphaKind kind = opt.rule == "alpha-conj" ? AlphaKind::Conjunctive
                                                    : AlphaKind::Disjunctive;
    classical = tbmq::alpha_junction(inputs[0], inputs[1], opt.alpha, kind);
    report.operation =
        "combine/" + opt.rule + " alpha=" + std::to_string(opt.alpha);
  } else {
    tbmq::throw_error(ErrorCode::InvalidArgument,
                      "--rule must be ccr|dcr|cecr|decr|alpha-conj|alpha-disj");
  }
  report.classical = classical->values();

  // Quantum path.
  if (mode.enabled) {
    const auto prep = tbmq::qc::prepare_registers(inputs);
    tbmq::qc::BankReadout readout;
    if (!opt.expr.empty()) {
      readout =
          tbmq::qc::bacr_circuit(prep, tbmq::BooleanExpression::parse(opt.expr));
    } else if (opt.rule == "ccr") {
      readout = tbmq::qc::ccr_circuit(prep);
    } else if (opt.rule == "dcr") {
      readout = tbmq::qc::dcr_circuit(prep);
    } else if (opt.rule == "cecr") {
      readout = tbmq::qc::cecr_circuit(prep);
    } else if (opt.rule == "decr") {
      readout = tbmq::qc::decr_circuit(prep);
    } else {
      const AlphaKind kind = opt.rule == "alpha-conj" ? AlphaKind::Conjunctive
                                                      : AlphaKind::Disjunctive;
      readout = tbmq::qc::alpha_entire_circuit(prep, opt.alpha, kind);
    }
    dump_circuit(opt.dump, readout.circuit);
    report.counts = tbmq::qc::gate_count(readout.circuit, readout.ancillas,
                                         readout.operation_begin);
    report.quantum = read_bank(readout.circuit, readout.bank, mode,
                               resolve_seed(opt.seed));
    report.shots = mode.shots;
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  emit_report(report, mode);
}

// ---------------------------------------------------------------------------
// revise

struct ReviseOptions {
  std::string file;
  std::string op;
  std::string set;
  double beta = -1.0;
  std::string quantum = "exact";
  std::string dump;
  std::uint64_t seed = 0;
};

void cmd_revise(const ReviseOptions& opt) {
  const QuantumMode mode = parse_quantum_mode(opt.quantum);
  const MassFunction m = tbmq::io::load_mass_document(opt.file).mass;
  const SubsetIndex focal = m.frame().subset_from_key(opt.set);
  if (opt.op != "cer" && opt.op != "crr") {
    tbmq::throw_error(ErrorCode::InvalidArgument, "--op must be cer or crr");
  }
  const bool enhance = opt.op == "cer";

  const auto t0 = std::chrono::steady_clock::now();
  RunReport report(m.frame());
  report.operation = "revise/" + opt.op + " set=" +
                     (opt.set.empty() ? "{}" : opt.set) +
                     " beta=" + std::to_string(opt.beta);
  report.classical = (enhance ? tbmq::cer(m, focal, opt.beta)
                              : tbmq::crr(m, focal, opt.beta))
                         .values();

  if (mode.enabled) {
    const auto prep = tbmq::qc::prepare_mfqs(m);
    const auto partial = enhance ? tbmq::qc::cer_circuit(prep, opt.beta)
                                 : tbmq::qc::crr_circuit(prep, opt.beta);
    const auto circuit = tbmq::qc::with_extraction(partial, focal);
    dump_circuit(opt.dump, circuit);
    report.counts = tbmq::qc::gate_count(circuit, partial.ancillas,
                                         partial.operation_begin);
    report.quantum =
        read_bank(circuit, partial.extraction, mode, resolve_seed(opt.seed));
    report.shots = mode.shots;
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  emit_report(report, mode);
}

// ---------------------------------------------------------------------------
// product

struct ProductOptions {
  std::string file;
  std::string op;
  std::string side = "left";
  std::string theta;
  std::string given;
  std::string fixture;
  std::string quantum = "exact";
  std::string dump;
  std::uint64_t seed = 0;
};

std::vector<std::string> split_labels(const std::string& csv) {
  std::vector<std::string> labels;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    if (comma == std::string::npos) comma = csv.size();
    labels.push_back(csv.substr(start, comma - start));
    start = comma + 1;
  }
  return labels;
}

RunReport quantum_marginalize(const ProductFrame& pf, const MassFunction& joint,
                              Side side, const QuantumMode& mode,
                              std::uint64_t seed,
                              const std::string& dump = "") {
  RunReport report(side == Side::Left ? pf.left() : pf.right());
  report.operation =
      side == Side::Left ? "product/marginalize left" : "product/marginalize right";
  report.classical = tbmq::marginalize(pf, joint, side).values();
  if (mode.enabled) {
    const auto prep = tbmq::qc::prepare_mfqs(joint);
    const auto readout = tbmq::qc::marginalize_circuit(prep, pf, side);
    dump_circuit(dump, readout.circuit);
    report.counts = tbmq::qc::gate_count(readout.circuit, readout.ancillas,
                                         readout.operation_begin);
    report.quantum = read_bank(readout.circuit, readout.bank, mode, seed);
    report.shots = mode.shots;
  }
  return report;
}

Json kets_json(const FrameOfDiscernment& joint_frame, const Vector& values) {
  Json map = Json::object();
  const int width = joint_frame.size();
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) == 0.0) continue;
    map[tbmq::qsim::ket_label(static_cast<std::uint64_t>(i), width)] =
        tbmq::io::round_sig(values(i));
  }
  return map;
}

void emit_product_reports(std::vector<RunReport>& reports,
                          const QuantumMode& mode,
                          const ProductFrame* kets_frame) {
  Json doc = Json::object();
  Json array = Json::array();
  bool all_pass = true;
  for (auto& report : reports) {
    finish_report(report, mode);
    if (g_pretty) print_pretty_report(report);
    Json entry = report_json(report);
    if (kets_frame && report.frame == kets_frame->joint()) {
      entry["basis_states"] = kets_json(
          report.frame, report.quantum ? *report.quantum : report.classical);
    }
    all_pass = all_pass && report.pass;
    array.push_back(std::move(entry));
  }
  doc["results"] = std::move(array);
  doc["status"] = all_pass ? "PASS" : "FAIL";
  std::cout << doc.dump(2) << "\n";
}

void cmd_product(const ProductOptions& opt) {
  const QuantumMode mode = parse_quantum_mode(opt.quantum);
  const std::uint64_t seed = resolve_seed(opt.seed);
  std::vector<RunReport> reports;

  if (!opt.fixture.empty()) {
    if (opt.fixture == "example3") {
      const ProductFrame pf = tbmq::fixtures::example3_frame();
      const MassFunction joint = tbmq::fixtures::example3_joint();
      reports.push_back(quantum_marginalize(pf, joint, Side::Left, mode, seed));
      reports.push_back(
          quantum_marginalize(pf, joint, Side::Right, mode, seed));
      emit_product_reports(reports, mode, nullptr);
      return;
    }
    if (opt.fixture == "example4" || opt.fixture == "example5") {
      const ProductFrame pf = tbmq::fixtures::example3_frame();
      const MassFunction m = tbmq::fixtures::example45_marginal();
      RunReport report(pf.joint());
      const auto prep = tbmq::qc::prepare_mfqs(m);
      tbmq::qc::BankReadout readout;
      if (opt.fixture == "example4") {
        report.operation = "product/vacuous";
        report.classical = tbmq::vacuous_extend(pf, m).values();
        readout = tbmq::qc::vacuous_circuit(prep, pf);
      } else {
        const SubsetIndex given = pf.right().subset_from_key("t2");
        report.operation = "product/balloon given=t2";
        report.classical = tbmq::ballooning_extend(pf, m, given).values();
        readout = tbmq::qc::ballooning_circuit(prep, pf, given);
      }
      if (mode.enabled) {
        report.counts = tbmq::qc::gate_count(readout.circuit, readout.ancillas,
                                             readout.operation_begin);
        report.quantum = read_bank(readout.circuit, readout.bank, mode, seed);
        report.shots = mode.shots;
      }
      reports.push_back(std::move(report));
      emit_product_reports(reports, mode, &pf);
      return;
    }
    tbmq::throw_error(ErrorCode::InvalidArgument,
                      "--fixture must be example3, example4 or example5");
  }

  if (opt.file.empty()) {
    tbmq::throw_error(ErrorCode::InvalidArgument,
                      "product needs an input file or --fixture");
  }
  const tbmq::io::MassDocument doc = tbmq::io::load_mass_document(opt.file);

  if (opt.op == "marginalize" || opt.op == "condition") {
    if (!doc.product) {
      tbmq::throw_error(ErrorCode::NotAProductFrame,
                        opt.op + " needs a joint document (left/right frames)");
    }
    const ProductFrame& pf = *doc.product;
    if (opt.op == "marginalize") {
      const Side side = opt.side == "right" ? Side::Right : Side::Left;
      reports.push_back(
          quantum_marginalize(pf, doc.mass, side, mode, seed, opt.dump));
      emit_product_reports(reports, mode, nullptr);
      return;
    }
    // Conditioning: combine with the categorical window under the
    // conjunctive rule, then project; the circuit composes the same
    // building blocks.
    const SubsetIndex given = pf.right().subset_from_key(opt.given);
    RunReport report(pf.left());
    report.operation = "product/condition given=" + opt.given;
    report.classical = tbmq::conditioning(pf, doc.mass, given).values();
    if (mode.enabled) {
      const MassFunction window =
          MassFunction::categorical(pf.joint(), pf.cylinder_right(given));
      const std::vector<MassFunction> pair{doc.mass, window};
      const auto prep = tbmq::qc::prepare_registers(pair);
      const auto combined = tbmq::qc::ccr_circuit(prep);
      const tbmq::qc::PreparedMass joint_prep{combined.circuit, combined.bank};
      const auto readout =
          tbmq::qc::marginalize_circuit(joint_prep, pf, Side::Left);
      report.counts = tbmq::qc::gate_count(
          readout.circuit, combined.ancillas + readout.ancillas,
          combined.operation_begin);
      report.quantum = read_bank(readout.circuit, readout.bank, mode, seed);
      report.shots = mode.shots;
    }
    reports.push_back(std::move(report));
    emit_product_reports(reports, mode, nullptr);
    return;
  }

  if (opt.op == "vacuous" || opt.op == "balloon") {
    if (doc.product) {
      tbmq::throw_error(ErrorCode::NotAProductFrame,
                        opt.op + " extends a plain (non-joint) mass function");
    }
    if (opt.theta.empty()) {
      tbmq::throw_error(ErrorCode::InvalidArgument,
                        opt.op + " needs --theta with the new frame's labels");
    }
    const ProductFrame pf(doc.mass.frame(),
                          FrameOfDiscernment(split_labels(opt.theta)));
    RunReport report(pf.joint());
    const auto prep = tbmq::qc::prepare_mfqs(doc.mass);
    tbmq::qc::BankReadout readout;
    if (opt.op == "vacuous") {
      report.operation = "product/vacuous";
      report.classical = tbmq::vacuous_extend(pf, doc.mass).values();
      readout = tbmq::qc::vacuous_circuit(prep, pf);
    } else {
      const SubsetIndex given = pf.right().subset_from_key(opt.given);
      report.operation = "product/balloon given=" + opt.given;
      report.classical = tbmq::ballooning_extend(pf, doc.mass, given).values();
      readout = tbmq::qc::ballooning_circuit(prep, pf, given);
    }
    if (mode.enabled) {
      dump_circuit(opt.dump, readout.circuit);
      report.counts = tbmq::qc::gate_count(readout.circuit, readout.ancillas,
                                           readout.operation_begin);
      report.quantum = read_bank(readout.circuit, readout.bank, mode, seed);
      report.shots = mode.shots;
    }
    reports.push_back(std::move(report));
    emit_product_reports(reports, mode, &pf);
    return;
  }

  tbmq::throw_error(ErrorCode::InvalidArgument,
                    "--op must be marginalize|vacuous|balloon|condition");
}

// ---------------------------------------------------------------------------
// qsim run

struct QsimOptions {
  std::string file;
  std::string initial;
  std::string qubits;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
};

void cmd_qsim_run(const QsimOptions& opt) {
  std::ifstream in(opt.file);
  if (!in) {
    tbmq::throw_error(ErrorCode::ParseError, "cannot open " + opt.file);
  }
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  const auto circuit = tbmq::qsim::circuit_from_text(text);
  const auto state = opt.initial.empty()
                         ? tbmq::qsim::run(circuit)
                         : tbmq::qsim::run(circuit, opt.initial);

  std::vector<int> qubits;
  if (opt.qubits.empty()) {
    for (int q = 0; q < circuit.num_qubits; ++q) qubits.push_back(q);
  } else {
    for (const auto& item : split_labels(opt.qubits)) {
      qubits.push_back(std::stoi(item));
    }
  }

  Json doc = Json::object();
  doc["qubits"] = qubits;
  const int width = static_cast<int>(qubits.size());
  if (opt.shots > 0) {
    const auto histogram = tbmq::qsim::sample(state, qubits, opt.shots,
                                              resolve_seed(opt.seed));
    Json map = Json::object();
    for (std::size_t i = 0; i < histogram.size(); ++i) {
      if (histogram[i] == 0) continue;
      map[tbmq::qsim::ket_label(i, width)] = histogram[i];
    }
    doc["shots"] = opt.shots;
    doc["histogram"] = std::move(map);
  } else {
    const Vector probs = tbmq::qsim::probabilities(state, qubits);
    Json map = Json::object();
    for (Eigen::Index i = 0; i < probs.size(); ++i) {
      if (probs(i) == 0.0) continue;
      map[tbmq::qsim::ket_label(static_cast<std::uint64_t>(i), width)] =
          tbmq::io::round_sig(probs(i));
    }
    doc["probabilities"] = std::move(map);
  }
  std::cout << doc.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// gatecount

void cmd_gatecount(int n, int k, std::uint64_t seed) {
  if (n < 1 || n > 12) {
    tbmq::throw_error(ErrorCode::FrameTooLarge,
                      "--n must lie in 1..12 for gate accounting");
  }
  if (k < 2) {
    tbmq::throw_error(ErrorCode::InvalidArgument, "--k must be >= 2");
  }

  // Any fully supported mass function exercises every preparation gate;
  // the combination counts do not depend on the values.
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("w" + std::to_string(i + 1));
  const FrameOfDiscernment frame{labels};
  std::mt19937_64 rng(seed ? seed : 1);
  auto random_mass = [&] {
    Vector v(frame.subset_count());
    std::uniform_real_distribution<double> uniform(0.1, 1.0);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = uniform(rng);
    v /= v.sum();
    return MassFunction(frame, std::move(v));
  };

  std::vector<MassFunction> sources;
  for (int j = 0; j < k; ++j) sources.push_back(random_mass());
  const auto multi = tbmq::qc::prepare_registers(sources);
  const auto cascade = tbmq::qc::ccr_circuit(multi);
  const long ccr_toffoli =
      tbmq::qc::gate_count(cascade.circuit, 0, cascade.operation_begin)
          .toffoli;

  const auto partial = tbmq::qc::alpha_partial_circuit(
      tbmq::qc::prepare_mfqs(sources[0]), 0.5, AlphaKind::Conjunctive);
  const long partial_cnot =
      tbmq::qc::gate_count(tbmq::qc::full_extraction_circuit(partial), 0,
                           partial.operation_begin)
          .cnot;

  const std::vector<MassFunction> two{sources[0], sources[1]};
  const auto entire = tbmq::qc::alpha_entire_circuit(
      tbmq::qc::prepare_registers(two), 0.5, AlphaKind::Conjunctive);
  const long entire_controls =
      tbmq::qc::gate_count(entire.circuit, 0, entire.operation_begin)
          .control_gates();

  const double pow2n = std::pow(2.0, n);
  struct Row {
    const char* operation;
    const char* mass;
    double classical;
    long quantum;
  };
  const Row rows[] = {
      {"ccr", "poss-transferable", static_cast<double>((k - 1) * n),
       ccr_toffoli},
      {"ccr", "general", (k - 1) * pow2n, ccr_toffoli},
      {"alpha-partial", "poss-transferable", n * pow2n, partial_cnot},
      {"alpha-partial", "general", pow2n * pow2n, partial_cnot},
      {"alpha-entire", "poss-transferable", n * pow2n, entire_controls},
      {"alpha-entire", "general", pow2n * pow2n, entire_controls},
  };

  Json doc = Json::object();
  doc["n"] = n;
  doc["k"] = k;
  Json array = Json::array();
  for (const Row& row : rows) {
    Json entry = Json::object();
    entry["operation"] = row.operation;
    entry["mass"] = row.mass;
    entry["classical_multiplications"] = row.classical;
    entry["quantum_gates"] = row.quantum;
    array.push_back(std::move(entry));
  }
  doc["rows"] = std::move(array);
  std::cout << doc.dump(2) << "\n";

  if (g_pretty) {
    std::fprintf(stderr, "%-16s %-18s %14s %14s\n", "operation", "mass",
                 "classical", "quantum");
    for (const Row& row : rows) {
      std::fprintf(stderr, "%-16s %-18s %14.0f %14ld\n", row.operation,
                   row.mass, row.classical, row.quantum);
    }
  }
}

// ---------------------------------------------------------------------------
// verify

struct Check {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool approx(const Vector& a, const Vector& b, double tol) {
  return a.size() == b.size() && divergence(a, b) <= tol;
}

std::vector<Check> build_checks(std::uint64_t seed);

void cmd_verify(bool all, int example, std::uint64_t seed) {
  std::vector<Check> checks = build_checks(seed);
  if (!all && example > 0) {
    const std::string prefix = "example" + std::to_string(example);
    std::erase_if(checks, [&](const Check& c) {
      return c.name.rfind(prefix, 0) != 0;
    });
    if (checks.empty()) {
      tbmq::throw_error(ErrorCode::InvalidArgument,
                        "--example must be 1..5");
    }
  }

  Json results = Json::array();
  bool all_pass = true;
  for (auto& check : checks) {
    std::string detail;
    bool pass = false;
    try {
      pass = check.run(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    std::fprintf(stderr, "%s %s%s%s\n", pass ? "PASS" : "FAIL",
                 check.name.c_str(), detail.empty() ? "" : ": ",
                 detail.c_str());
    Json entry = Json::object();
    entry["name"] = check.name;
    entry["status"] = pass ? "PASS" : "FAIL";
    if (!detail.empty()) entry["detail"] = detail;
    results.push_back(std::move(entry));
    all_pass = all_pass && pass;
  }
  Json doc = Json::object();
  doc["checks"] = std::move(results);
  doc["status"] = all_pass ? "PASS" : "FAIL";
  std::cout << doc.dump(2) << "\n";
  if (!all_pass) g_exit_status = std::max(g_exit_status, 1);
}

}  // namespace

// Separate definition to keep the command wiring readable above.
namespace {

MassFunction random_mass(const FrameOfDiscernment& frame,
                         std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  Vector v(frame.subset_count());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = uniform(rng);
  v /= v.sum();
  return MassFunction(frame, std::move(v));
}

std::vector<Check> build_checks(std::uint64_t seed) {
  using namespace tbmq;
  std::vector<Check> checks;

  checks.push_back({"example1-classical", [](std::string& detail) {
    const auto expr = BooleanExpression::parse("(x1 & x2) | (!x1 & !x2)");
    const std::vector<MassFunction> inputs{fixtures::example1_m1(),
                                           fixtures::example1_m2()};
    const Vector got = bacr(inputs, expr).values();
    detail = "max err " +
             format_err(divergence(got, fixtures::example1_result()));
    return approx(got, fixtures::example1_result(), 1e-9) &&
           approx(got, cecr(inputs[0], inputs[1]).values(), 1e-12);
  }});

  checks.push_back({"example1-quantum", [](std::string& detail) {
    const auto expr = BooleanExpression::parse("(x1 & x2) | (!x1 & !x2)");
    const std::vector<MassFunction> inputs{fixtures::example1_m1(),
                                           fixtures::example1_m2()};
    const auto readout = qc::bacr_circuit(qc::prepare_registers(inputs), expr);
    const Vector got =
        qc::measured_masses(qsim::run(readout.circuit), readout.bank);
    detail = "max err " +
             format_err(divergence(got, fixtures::example1_result()));
    return approx(got, fixtures::example1_result(), 1e-9);
  }});

  checks.push_back({"example1-shots8096", [seed](std::string& detail) {
    const auto expr = BooleanExpression::parse("(x1 & x2) | (!x1 & !x2)");
    const std::vector<MassFunction> inputs{fixtures::example1_m1(),
                                           fixtures::example1_m2()};
    const auto readout = qc::bacr_circuit(qc::prepare_registers(inputs), expr);
    const auto histogram =
        qsim::sample(qsim::run(readout.circuit), readout.bank, 8096, seed);
    Vector freq(4);
    for (int i = 0; i < 4; ++i) freq(i) = histogram[i] / 8096.0;
    detail = "sampled " + std::to_string(freq(0)) + "," +
             std::to_string(freq(1)) + "," + std::to_string(freq(2)) + "," +
             std::to_string(freq(3));
    return within_three_sigma(fixtures::example1_result(), freq, 8096);
  }});

  checks.push_back({"example2-classical", [](std::string& detail) {
    const MassFunction m = fixtures::example2_m();
    const Vector empty_adj =
        alpha_adjusted_vector(m, 0, 0.3, AlphaKind::Conjunctive);
    const Vector w1_adj =
        alpha_adjusted_vector(m, 1, 0.3, AlphaKind::Conjunctive);
    detail = "max err " +
             format_err(std::max(
                 divergence(empty_adj, fixtures::example2_empty_reference()),
                 divergence(w1_adj, fixtures::example2_w1_reference())));
    return approx(empty_adj, fixtures::example2_empty_reference(), 5e-3) &&
           approx(w1_adj, fixtures::example2_w1_reference(), 5e-3);
  }});

  checks.push_back({"example2-quantum", [](std::string& detail) {
    const MassFunction m = fixtures::example2_m();
    const auto partial = qc::alpha_partial_circuit(qc::prepare_mfqs(m), 0.3,
                                                   AlphaKind::Conjunctive);
    const auto base_state = qsim::run(partial.base);
    const Vector q_empty = qc::extract_vector(partial, base_state, 0);
    const Vector q_w1 = qc::extract_vector(partial, base_state, 1);
    const double err = std::max(
        divergence(q_empty,
                   alpha_adjusted_vector(m, 0, 0.3, AlphaKind::Conjunctive)),
        divergence(q_w1,
                   alpha_adjusted_vector(m, 1, 0.3, AlphaKind::Conjunctive)));
    detail = "max err " + format_err(err);
    return err < 1e-9;
  }});

  checks.push_back({"example3-marginals", [](std::string& detail) {
    const ProductFrame pf = fixtures::example3_frame();
    const MassFunction joint = fixtures::example3_joint();
    const Vector left = marginalize(pf, joint, Side::Left).values();
    const Vector right = marginalize(pf, joint, Side::Right).values();
    Vector expect_left(4), expect_right(4);
    expect_left << 0, 0.3, 0, 0.7;
    expect_right << 0, 0.1, 0.4, 0.5;
    const auto lprep = qc::prepare_mfqs(joint);
    const auto lread = qc::marginalize_circuit(lprep, pf, Side::Left);
    const auto rread = qc::marginalize_circuit(lprep, pf, Side::Right);
    const Vector qleft =
        qc::measured_masses(qsim::run(lread.circuit), lread.bank);
    const Vector qright =
        qc::measured_masses(qsim::run(rread.circuit), rread.bank);
    detail = "left err " + format_err(divergence(qleft, left));
    return approx(left, expect_left, 1e-12) &&
           approx(right, expect_right, 1e-12) &&
           approx(qleft, left, 1e-9) && approx(qright, right, 1e-9);
  }});

  checks.push_back({"example4-vacuous", [](std::string&) {
    const ProductFrame pf = fixtures::example3_frame();
    const MassFunction m = fixtures::example45_marginal();
    const MassFunction extended = vacuous_extend(pf, m);
    if (std::abs(extended(0b0011) - 0.1) > 1e-12 ||
        std::abs(extended(0b1100) - 0.4) > 1e-12 ||
        std::abs(extended(0b1111) - 0.5) > 1e-12) {
      return false;
    }
    const auto readout = qc::vacuous_circuit(qc::prepare_mfqs(m), pf);
    const Vector got =
        qc::measured_masses(qsim::run(readout.circuit), readout.bank);
    return approx(got, extended.values(), 1e-9);
  }});

  checks.push_back({"example5-ballooning", [](std::string& detail) {
    const ProductFrame pf = fixtures::example3_frame();
    const MassFunction m = fixtures::example45_marginal();
    const SubsetIndex given = pf.right().subset_from_key("t2");
    const MassFunction extended = ballooning_extend(pf, m, given);
    // 0b0111 = ket "1110", 0b1101 = ket "1011", 0b1111 = ket "1111".
    if (std::abs(extended(0b0111) - 0.1) > 1e-12 ||
        std::abs(extended(0b1101) - 0.4) > 1e-12 ||
        std::abs(extended(0b1111) - 0.5) > 1e-12) {
      detail = "classical focal sets off";
      return false;
    }
    const auto readout =
        qc::ballooning_circuit(qc::prepare_mfqs(m), pf, given);
    const Vector got =
        qc::measured_masses(qsim::run(readout.circuit), readout.bank);
    detail = "kets 1110/1011/1111 -> " + std::to_string(got(0b0111)) + "/" +
             std::to_string(got(0b1101)) + "/" + std::to_string(got(0b1111));
    return approx(got, extended.values(), 1e-9);
  }});

  checks.push_back({"mobius-roundtrips", [seed](std::string&) {
    std::mt19937_64 rng(seed + 1);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 5);
      std::vector<std::string> labels;
      for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
      const FrameOfDiscernment frame{labels};
      const MassFunction m = random_mass(frame, rng);
      if (!approx(bel_to_mass(to_bel(m)).values(), m.values(), 1e-10) ||
          !approx(b_to_mass(to_b(m)).values(), m.values(), 1e-10) ||
          !approx(q_to_mass(to_q(m)).values(), m.values(), 1e-10) ||
          !approx(pl_to_mass(to_pl(m)).values(), m.values(), 1e-10)) {
        return false;
      }
    }
    return true;
  }});

  checks.push_back({"boundary-degeneracy", [seed](std::string&) {
    std::mt19937_64 rng(seed + 2);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 4);
      std::vector<std::string> labels;
      for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
      const FrameOfDiscernment frame{labels};
      const MassFunction m1 = random_mass(frame, rng);
      const MassFunction m2 = random_mass(frame, rng);
      if (!approx(alpha_junction(m1, m2, 1.0, AlphaKind::Conjunctive).values(),
                  ccr(m1, m2).values(), 1e-10) ||
          !approx(alpha_junction(m1, m2, 0.0, AlphaKind::Conjunctive).values(),
                  cecr(m1, m2).values(), 1e-10) ||
          !approx(alpha_junction(m1, m2, 1.0, AlphaKind::Disjunctive).values(),
                  dcr(m1, m2).values(), 1e-10) ||
          !approx(alpha_junction(m1, m2, 0.0, AlphaKind::Disjunctive).values(),
                  decr(m1, m2).values(), 1e-10)) {
        return false;
      }
      if (!approx(ccr(m1, MassFunction::vacuous(frame)).values(), m1.values(),
                  1e-12) ||
          !approx(dcr(m1, MassFunction::categorical(frame, 0)).values(),
                  m1.values(), 1e-12)) {
        return false;
      }
    }
    return true;
  }});

  checks.push_back({"dual-route-rules", [seed](std::string&) {
    std::mt19937_64 rng(seed + 3);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 4);
      std::vector<std::string> labels;
      for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
      const FrameOfDiscernment frame{labels};
      const MassFunction m1 = random_mass(frame, rng);
      const MassFunction m2 = random_mass(frame, rng);
      if (!approx(ccr(m1, m2).values(), ccr_via_commonality(m1, m2).values(),
                  1e-12) ||
          !approx(dcr(m1, m2).values(), dcr_via_implicability(m1, m2).values(),
                  1e-12)) {
        return false;
      }
    }
    return true;
  }});

  checks.push_back({"quantum-equivalence", [seed](std::string&) {
    std::mt19937_64 rng(seed + 4);
    for (int trial = 0; trial < 12; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 3);
      std::vector<std::string> labels;
      for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
      const FrameOfDiscernment frame{labels};
      const MassFunction m1 = random_mass(frame, rng);
      const MassFunction m2 = random_mass(frame, rng);

      const auto prep1 = qc::prepare_mfqs(m1);
      if (!approx(qc::measured_masses(qsim::run(prep1.circuit), prep1.qubits),
                  m1.values(), 1e-10)) {
        return false;
      }
      const std::vector<MassFunction> pair{m1, m2};
      const auto multi = qc::prepare_registers(pair);
      const auto combined = qc::ccr_circuit(multi);
      if (!approx(
              qc::measured_masses(qsim::run(combined.circuit), combined.bank),
              ccr(m1, m2).values(), 1e-10)) {
        return false;
      }
      const double alpha = 0.25 * static_cast<double>(rng() % 5);
      const auto entire =
          qc::alpha_entire_circuit(multi, alpha, AlphaKind::Disjunctive);
      if (!approx(
              qc::measured_masses(qsim::run(entire.circuit), entire.bank),
              alpha_junction(m1, m2, alpha, AlphaKind::Disjunctive).values(),
              1e-10)) {
        return false;
      }
      const double beta = 0.25 * static_cast<double>(rng() % 5);
      const SubsetIndex focal =
          static_cast<SubsetIndex>(rng() % frame.subset_count());
      const auto partial = qc::crr_circuit(prep1, beta);
      if (!approx(qc::extract_vector(partial, qsim::run(partial.base), focal),
                  crr(m1, focal, beta).values(), 1e-10)) {
        return false;
      }
    }
    return true;
  }});

  checks.push_back({"product-roundtrips", [seed](std::string&) {
    std::mt19937_64 rng(seed + 5);
    for (int trial = 0; trial < 50; ++trial) {
      const int no = 1 + static_cast<int>(rng() % 3);
      const int nt = 1 + static_cast<int>(rng() % 3);
      std::vector<std::string> lo, lt;
      for (int i = 0; i < no; ++i) lo.push_back("w" + std::to_string(i));
      for (int i = 0; i < nt; ++i) lt.push_back("t" + std::to_string(i));
      const ProductFrame pf{FrameOfDiscernment{lo}, FrameOfDiscernment{lt}};
      const MassFunction m = random_mass(pf.left(), rng);
      if (marginalize(pf, vacuous_extend(pf, m), Side::Left).values() !=
          m.values()) {
        return false;
      }
      const SubsetIndex given = static_cast<SubsetIndex>(
          1 + rng() % pf.right().full_set());
      if (conditioning(pf, ballooning_extend(pf, m, given), given).values() !=
          m.values()) {
        return false;
      }
    }
    return true;
  }});

  return checks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Transferable-belief-model toolkit: classical operations next to "
      "their quantum-circuit implementations on an exact statevector "
      "simulator"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", g_pretty, "human tables on stderr");

  std::string tr_file, tr_to;
  auto* transform =
      app.add_subcommand("transform", "re-encode a mass function");
  transform->fallthrough();
  transform->add_option("file", tr_file, "mass-function JSON document")
      ->required();
  transform->add_option("--to", tr_to, "bel|pl|q|b|betp|plp|contour")
      ->required();

  CombineOptions combine_opt;
  auto* combine = app.add_subcommand(
      "combine", "combine evidence classically and on circuits");
  combine->fallthrough();
  combine->add_option("files", combine_opt.files, "mass-function documents")
      ->required()
      ->expected(-2);
  combine->add_option("--rule", combine_opt.rule,
                      "ccr|dcr|cecr|decr|alpha-conj|alpha-disj");
  combine->add_option("--expr", combine_opt.expr,
                      "Boolean expression like (x1&x2)|(!x1&!x2)");
  combine->add_option("--alpha", combine_opt.alpha, "alpha in [0,1]");
  combine->add_option("--quantum", combine_opt.quantum, "exact|off|shots=N");
  combine->add_option("--dump-circuit", combine_opt.dump,
                      "write the built circuit to this file");
  combine->add_option("--seed", combine_opt.seed, "sampling seed");

  ReviseOptions revise_opt;
  auto* revise =
      app.add_subcommand("revise", "contour enhancement/reduction revision");
  revise->fallthrough();
  revise->add_option("file", revise_opt.file, "mass-function document")
      ->required();
  revise->add_option("--op", revise_opt.op, "cer|crr")->required();
  revise->add_option("--set", revise_opt.set, "comma-joined element labels");
  revise->add_option("--beta", revise_opt.beta, "beta in [0,1]")->required();
  revise->add_option("--quantum", revise_opt.quantum, "exact|off|shots=N");
  revise->add_option("--dump-circuit", revise_opt.dump,
                      "write the built circuit to this file");
  revise->add_option("--seed", revise_opt.seed, "sampling seed");

  ProductOptions product_opt;
  auto* product =
      app.add_subcommand("product", "product-space operations");
  product->fallthrough();
  product->add_option("file", product_opt.file, "mass-function document");
  product->add_option("--op", product_opt.op,
                      "marginalize|vacuous|balloon|condition");
  product->add_option("--side", product_opt.side, "left|right");
  product->add_option("--theta", product_opt.theta,
                      "labels of the second frame (vacuous/balloon)");
  product->add_option("--given", product_opt.given,
                      "conditioning subset of the right frame");
  product->add_option("--fixture", product_opt.fixture,
                      "example3|example4|example5");
  product->add_option("--quantum", product_opt.quantum, "exact|off|shots=N");
  product->add_option("--dump-circuit", product_opt.dump,
                      "write the built circuit to this file");
  product->add_option("--seed", product_opt.seed, "sampling seed");

  QsimOptions qsim_opt;
  auto* qsim_cmd = app.add_subcommand("qsim", "statevector simulator");
  qsim_cmd->fallthrough();
  auto* qsim_run = qsim_cmd->add_subcommand("run", "run a circuit file");
  qsim_run->fallthrough();
  qsim_run->add_option("file", qsim_opt.file, "circuit text file")->required();
  qsim_run->add_option("--initial", qsim_opt.initial,
                       "basis string, first char = qubit 0");
  qsim_run->add_option("--qubits", qsim_opt.qubits,
                       "comma-joined readout qubits (default all)");
  qsim_run->add_option("--shots", qsim_opt.shots, "sample instead of exact");
  qsim_run->add_option("--seed", qsim_opt.seed, "sampling seed");
  qsim_cmd->require_subcommand(1);

  int gc_n = 3, gc_k = 2;
  std::string gc_suite = "table2";
  std::uint64_t gc_seed = 0;
  auto* gatecount = app.add_subcommand(
      "gatecount", "classical multiplication counts vs quantum gate counts");
  gatecount->fallthrough();
  gatecount->add_option("--suite", gc_suite, "table2");
  gatecount->add_option("--n", gc_n, "frame size")->required();
  gatecount->add_option("--k", gc_k, "number of sources");
  gatecount->add_option("--seed", gc_seed, "mass-generation seed");

  bool verify_all = false;
  int verify_example = 0;
  std::uint64_t verify_seed = 97;
  auto* verify = app.add_subcommand(
      "verify", "run the named fixtures and property sweeps");
  verify->fallthrough();
  verify->add_flag("--all", verify_all, "run everything (default)");
  verify->add_option("--example", verify_example, "run one example (1..5)");
  verify->add_option("--seed", verify_seed, "sweep seed");

  try {
    app.parse(argc, argv);
    if (*transform) {
      cmd_transform(tr_file, tr_to);
    } else if (*combine) {
      cmd_combine(combine_opt);
    } else if (*revise) {
      cmd_revise(revise_opt);
    } else if (*product) {
      cmd_product(product_opt);
    } else if (*qsim_cmd) {
      cmd_qsim_run(qsim_opt);
    } else if (*gatecount) {
      if (gc_suite != "table2") {
        tbmq::throw_error(ErrorCode::InvalidArgument,
                          "--suite must be table2");
      }
      cmd_gatecount(gc_n, gc_k, resolve_seed(gc_seed));
    } else if (*verify) {
      cmd_verify(verify_all || verify_example == 0, verify_example,
                 resolve_seed(verify_seed));
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const tbmq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError ? 2 : 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return g_exit_status;
}
