// Copyright 2026 The gatemix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "specfiles.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace gatemix::cli {

namespace {

[[noreturn]] void fail(const std::string& path, int line, const std::string& message) {
  throw ParseError(path + ":" + std::to_string(line) + ": " + message);
}

MixedUnitaryEnsemble gate_section_to_ensemble(const SpecDocument& doc, const Section& section) {
  const bool has_angle = has_key(section, "angle");
  const bool has_options = has_key(section, "options");
  if (has_angle == has_options) {
    fail(doc.path, section.line,
         "[gate] needs exactly one of 'angle =' (exact) or 'target ='/'options =' (ensemble)");
  }
  try {
    if (has_angle) {
      const double angle = get_double(doc, section, "angle");
      return z_rotation_ensemble(ZRotationSpec(angle, {angle}), {1.0});
    }
    const double target = get_double(doc, section, "target");
    const std::vector<double> options = get_double_list(doc, section, "options");
    const ZRotationSpec spec(target, options);
    if (has_key(section, "probs")) {
      return z_rotation_ensemble(spec, get_double_list(doc, section, "probs"));
    }
    return z_rotation_ensemble(spec);
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& err) {
    fail(doc.path, section.line, std::string("invalid mixture: ") + err.what());
  }
}

long section_repeat(const SpecDocument& doc, const Section& section) {
  if (!has_key(section, "repeat")) return 1;
  const long repeat = get_long(doc, section, "repeat");
  if (repeat < 1) fail(doc.path, section.line, "'repeat' must be >= 1");
  return repeat;
}

Matrix named_gate(const std::string& name, const SpecDocument& doc, const Section& section) {
  if (name == "h") {
    Matrix h(2, 2);
    h << M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2;
    return h;
  }
  if (name == "x") return pauli_x();
  if (name == "y") return pauli_y();
  if (name == "z") return pauli_z();
  if (name == "s") return z_rotation(M_PI / 4.0);
  if (name == "sdg") return z_rotation(-M_PI / 4.0);
  if (name == "t") return t_gate();
  if (name == "cnot") {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 3) = 1.0;
    m(3, 2) = 1.0;
    return m;
  }
  if (name == "cz") {
    Matrix m = Matrix::Identity(4, 4);
    m(3, 3) = -1.0;
    return m;
  }
  fail(doc.path, section.line, "unknown gate name '" + name + "'");
}

}  // namespace

std::vector<BoundsGate> load_ensemble_spec(const std::string& path) {
  const SpecDocument doc = parse_keyval_file(path);
  if (doc.sections.empty()) {
    throw ParseError(path + ": no [gate] sections found");
  }
  std::vector<BoundsGate> gates;
  std::string problems;
  for (std::size_t idx = 0; idx < doc.sections.size(); ++idx) {
    const Section& section = doc.sections[idx];
    if (section.name != "gate") {
      fail(doc.path, section.line, "unknown section [" + section.name + "]");
    }
    try {
      const MixedUnitaryEnsemble ensemble = gate_section_to_ensemble(doc, section);
      const long repeat = section_repeat(doc, section);
      for (long r = 0; r < repeat; ++r) {
        gates.push_back(BoundsGate{ensemble, static_cast<int>(idx)});
      }
    } catch (const ParseError& err) {
      problems += std::string(err.what()) + "\n";
    }
  }
  if (!problems.empty()) {
    problems.pop_back();
    throw ParseError(problems);
  }
  return gates;
}

CircuitSpec load_circuit_spec(const std::string& path) {
  const SpecDocument doc = parse_keyval_file(path);
  CircuitSpec spec;
  spec.circuit.width = static_cast<int>(preamble_long(doc, "width", 1));
  for (const Section& section : doc.sections) {
    if (section.name != "gate") {
      fail(doc.path, section.line, "unknown section [" + section.name + "]");
    }
    std::vector<int> qubits{0};
    if (has_key(section, "qubits")) {
      qubits = get_int_list(doc, section, "qubits");
    } else if (has_key(section, "qubit")) {
      qubits = get_int_list(doc, section, "qubit");
    }

    GateSlot slot;
    slot.qubits = qubits;
    if (has_key(section, "name")) {
      const std::string name = get_string(doc, section, "name");
      if (name == "t-slot") {
        slot.content = TGateSlot{};
      } else if (name == "zrot") {
        slot.content = z_rotation(get_double(doc, section, "angle"));
      } else if (name == "zrot-ensemble") {
        slot.content = gate_section_to_ensemble(doc, section);
      } else {
        slot.content = named_gate(name, doc, section);
      }
    } else if (has_key(section, "options") || has_key(section, "target")) {
      slot.content = gate_section_to_ensemble(doc, section);
    } else if (has_key(section, "angle")) {
      slot.content = z_rotation(get_double(doc, section, "angle"));
    } else {
      fail(doc.path, section.line, "[gate] needs a 'name', 'angle', or 'target'/'options' entry");
    }

    const long repeat = section_repeat(doc, section);
    for (long r = 0; r < repeat; ++r) {
      spec.circuit.slots.push_back(slot);
    }
  }
  try {
    validate_circuit(spec.circuit);
  } catch (const std::invalid_argument& err) {
    throw ParseError(path + ": " + err.what());
  }
  return spec;
}

std::vector<AncillaState> load_ancilla_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path + ": cannot open file");
  }
  std::vector<AncillaState> ancillas;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream stream(raw);
    double theta = 0.0, tau = 0.0;
    if (!(stream >> theta)) continue;  // blank or comment-only line
    if (!(stream >> tau)) {
      fail(path, line_no, "expected two numbers per line (theta tau, radians)");
    }
    std::string extra;
    if (stream >> extra) {
      fail(path, line_no, "unexpected trailing token '" + extra + "'");
    }
    ancillas.emplace_back(theta, tau);
  }
  if (ancillas.empty()) {
    throw ParseError(path + ": empty ancilla list");
  }
  return ancillas;
}

Matrix parse_observable(const std::string& label, int width) {
  if (static_cast<int>(label.size()) != width) {
    throw ParseError("observable '" + label + "' must have one Pauli per qubit (width " +
                     std::to_string(width) + ")");
  }
  Matrix m = Matrix::Identity(1, 1);
  for (char c : label) {
    Matrix factor;
    switch (c) {
      case 'I': factor = identity(2); break;
      case 'X': factor = pauli_x(); break;
      case 'Y': factor = pauli_y(); break;
      case 'Z': factor = pauli_z(); break;
      default:
        throw ParseError("observable '" + label + "' may only contain I, X, Y, Z");
    }
    m = kron(m, factor);
  }
  return m;
}

}  // namespace gatemix::cli
