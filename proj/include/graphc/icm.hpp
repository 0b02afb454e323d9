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

#include <string>
#include <vector>

#include "graphc/circuit.hpp"
#include "graphc/graph_state.hpp"
#include "graphc/tableau.hpp"

namespace graphc {

enum class TeleportSign { Plus, Minus };  // Plus: T, measures A(+pi/4). Minus: Tdg.

/// One teleported T/Tdg: the consumed wire is measured in a rotated basis
/// and the fresh ancilla carries the logical state onward.
struct TeleportedT {
  int measured_wire;
  int continuation_wire;
  TeleportSign sign;
  int source_gate_id;

  friend bool operator==(const TeleportedT&, const TeleportedT&) = default;
};

/// Inverse-ICM form of a circuit: a Clifford-only prefix over the widened
/// register plus the list of pending rotated-basis measurements.
struct IcmCircuit {
  CircuitIR clifford_prefix;
  std::vector<TeleportedT> teleportations;
  /// Original wire -> final continuation wire (the live outputs).
  std::vector<int> wire_map;
  std::vector<NodeRole> roles;
  /// Original wires with a terminal MeasureZ, recorded as computational
  /// basis reads on the mapped outputs.
  std::vector<int> output_reads;

  int num_original_wires() const { return static_cast<int>(wire_map.size()); }
};

/// Teleport every T/Tdg onto a fresh Zero ancilla (one CNOT each) and
/// retarget the remaining gates, leaving a Clifford-only prefix. Ancillas
/// are allocated densely after the original wires in teleportation order.
/// Deterministic; throws std::invalid_argument on mid-circuit measurement.
IcmCircuit to_inverse_icm(const CircuitIR& c);

/// Tableau of the widened register after the whole Clifford prefix.
StabilizerTableau prefix_final_tableau(const IcmCircuit& icm);

/// Prefix in the circuit text grammar with `# teleport` comment lines
/// marking consumed wires.
std::string icm_to_text(const IcmCircuit& icm);

}  // namespace graphc
