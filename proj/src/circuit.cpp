// Copyright 2026 The graphc developers
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

#include "graphc/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace graphc {

bool is_two_qubit(GateKind k) { return k == GateKind::CNOT || k == GateKind::CZ; }

bool is_clifford(GateKind k) {
  switch (k) {
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::MeasureZ:
      return false;
    default:
      return true;
  }
}

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::CNOT: return "cnot";
    case GateKind::CZ: return "cz";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::MeasureZ: return "measure";
  }
  return "?";
}

namespace {

std::optional<GateKind> lookup_gate(const std::string& name) {
  static const std::map<std::string, GateKind> table = {
      {"h", GateKind::H},       {"s", GateKind::S},     {"sdg", GateKind::Sdg},
      {"x", GateKind::X},       {"y", GateKind::Y},     {"z", GateKind::Z},
      {"cnot", GateKind::CNOT}, {"cz", GateKind::CZ},   {"t", GateKind::T},
      {"tdg", GateKind::Tdg},   {"measure", GateKind::MeasureZ},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : line) {
    if (ch == '#') break;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  if (!cur.empty()) toks.push_back(std::move(cur));
  return toks;
}

int parse_int(const std::string& tok, int line, const char* what) {
  for (char ch : tok)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  try {
    return std::stoi(tok);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  }
}

}  // namespace

CircuitIR parse_circuit(const std::string& source) {
  CircuitIR c;
  bool have_header = false;
  bool gates_started = false;
  std::vector<bool> measured;

  std::istringstream in(source);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;

    if (toks[0] == "qubits") {
      if (have_header) throw ParseError(lineno, "duplicate qubits declaration");
      if (toks.size() != 2) throw ParseError(lineno, "usage: qubits N");
      int n = parse_int(toks[1], lineno, "wire count");
      if (n < 1) throw ParseError(lineno, "wire count must be positive");
      c.num_wires = n;
      c.initial_states.assign(n, InitState::Zero);
      measured.assign(n, false);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "qubits declaration must come first");

    auto check_wire = [&](int w) {
      if (w < 0 || w >= c.num_wires) throw ParseError(lineno, "wire index out of range");
    };

    if (toks[0] == "init") {
      if (gates_started) throw ParseError(lineno, "init must precede all gates");
      if (toks.size() != 3) throw ParseError(lineno, "usage: init <wire> zero|plus");
      int w = parse_int(toks[1], lineno, "wire index");
      check_wire(w);
      if (toks[2] == "zero")
        c.initial_states[w] = InitState::Zero;
      else if (toks[2] == "plus")
        c.initial_states[w] = InitState::Plus;
      else
        throw ParseError(lineno, "initial state must be zero or plus");
      continue;
    }

    auto kind = lookup_gate(toks[0]);
    if (!kind) throw ParseError(lineno, "unknown gate name '" + toks[0] + "'");
    gates_started = true;

    Gate g;
    g.kind = *kind;
    g.id = static_cast<int>(c.gates.size());
    std::size_t want = is_two_qubit(*kind) ? 2 : 1;
    if (toks.size() != want + 1)
      throw ParseError(lineno, std::string("gate ") + toks[0] + " expects " +
                                   std::to_string(want) + " wire operand(s)");
    for (std::size_t i = 1; i < toks.size(); ++i) {
      int w = parse_int(toks[i], lineno, "wire index");
      check_wire(w);
      g.targets.push_back(w);
    }
    if (g.targets.size() == 2 && g.targets[0] == g.targets[1])
      throw ParseError(lineno, "gate targets must be distinct");
    for (int w : g.targets) {
      if (measured[w]) throw ParseError(lineno, "gate after measurement on wire " + std::to_string(w));
    }
    if (g.kind == GateKind::MeasureZ) measured[g.targets[0]] = true;
    c.gates.push_back(std::move(g));
  }

  if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing qubits declaration");
  return c;
}

std::string print_circuit(const CircuitIR& c) {
  std::ostringstream out;
  out << "qubits " << c.num_wires << "\n";
  for (int w = 0; w < c.num_wires; ++w)
    if (c.initial_states[w] == InitState::Plus) out << "init " << w << " plus\n";
  for (const Gate& g : c.gates) {
    out << gate_name(g.kind);
    for (int w : g.targets) out << ' ' << w;
    out << "\n";
  }
  return out.str();
}

void validate_circuit(const CircuitIR& c) {
  if (c.num_wires < 1) throw std::invalid_argument("circuit must have at least one wire");
  if (static_cast<int>(c.initial_states.size()) != c.num_wires)
    throw std::invalid_argument("initial_states size does not match wire count");
  std::vector<bool> measured(c.num_wires, false);
  int expect_id = 0;
  for (const Gate& g : c.gates) {
    std::size_t want = is_two_qubit(g.kind) ? 2 : 1;
    if (g.targets.size() != want) throw std::invalid_argument("wrong operand count for gate");
    for (int w : g.targets) {
      if (w < 0 || w >= c.num_wires) throw std::invalid_argument("gate target out of range");
      if (measured[w]) throw std::invalid_argument("gate after measurement on a wire");
    }
    if (want == 2 && g.targets[0] == g.targets[1])
      throw std::invalid_argument("gate targets must be distinct");
    if (g.id != expect_id++) throw std::invalid_argument("gate ids must increase in program order");
    if (g.kind == GateKind::MeasureZ) measured[g.targets[0]] = true;
  }
}

int count_t_gates(const CircuitIR& c) {
  return static_cast<int>(std::count_if(c.gates.begin(), c.gates.end(), [](const Gate& g) {
    return g.kind == GateKind::T || g.kind == GateKind::Tdg;
  }));
}

bool validate_clifford_prefix(const CircuitIR& c) { return count_t_gates(c) == 0; }

}  // namespace graphc
