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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphc {

enum class GateKind { H, S, Sdg, X, Y, Z, CNOT, CZ, T, Tdg, MeasureZ };

bool is_two_qubit(GateKind k);
bool is_clifford(GateKind k);
const char* gate_name(GateKind k);

/// One operation on named wires. Two-qubit kinds carry (control, target).
struct Gate {
  GateKind kind;
  std::vector<int> targets;
  int id = 0;

  static Gate single(GateKind k, int wire, int id = 0) { return Gate{k, {wire}, id}; }
  static Gate two(GateKind k, int ctrl, int tgt, int id = 0) { return Gate{k, {ctrl, tgt}, id}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

enum class InitState { Zero, Plus };

/// Ordered gate list over a fixed wire count, restricted to Clifford+T
/// plus terminal Z measurements.
struct CircuitIR {
  int num_wires = 0;
  std::vector<InitState> initial_states;
  std::vector<Gate> gates;

  friend bool operator==(const CircuitIR&, const CircuitIR&) = default;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
};

/// Parse the line-oriented circuit grammar. Gate ids are assigned in
/// textual order starting at 0.
CircuitIR parse_circuit(const std::string& source);

/// Render a circuit back into the text grammar; parse(print(c)) == c.
std::string print_circuit(const CircuitIR& c);

/// Structural validation; throws std::invalid_argument on violations.
/// parse_circuit always returns validated circuits, this is for circuits
/// built programmatically.
void validate_circuit(const CircuitIR& c);

/// Number of T plus Tdg gates. Equals the ancilla count of the ICM pass
/// and the number of non-Pauli measurements in the compiled pattern.
int count_t_gates(const CircuitIR& c);

/// True iff the circuit contains no T/Tdg, i.e. it is directly
/// tableau-simulable end to end.
bool validate_clifford_prefix(const CircuitIR& c);

}  // namespace graphc
