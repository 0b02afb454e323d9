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

#include "graphc/icm.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace graphc {

IcmCircuit to_inverse_icm(const CircuitIR& c) {
  validate_circuit(c);
  const int n = c.num_wires;
  const int tcount = count_t_gates(c);

  IcmCircuit icm;
  icm.clifford_prefix.num_wires = n + tcount;
  icm.clifford_prefix.initial_states = c.initial_states;
  icm.clifford_prefix.initial_states.resize(n + tcount, InitState::Zero);

  std::vector<int> cur(n);
  for (int w = 0; w < n; ++w) cur[w] = w;

  int next_id = 0;
  auto emit = [&](GateKind k, int a, int b = -1) {
    Gate g;
    g.kind = k;
    g.id = next_id++;
    g.targets = b < 0 ? std::vector<int>{a} : std::vector<int>{a, b};
    icm.clifford_prefix.gates.push_back(std::move(g));
  };

  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::T:
      case GateKind::Tdg: {
        int w = g.targets[0];
        int ancilla = n + static_cast<int>(icm.teleportations.size());
        emit(GateKind::CNOT, cur[w], ancilla);
        icm.teleportations.push_back(
            {cur[w], ancilla, g.kind == GateKind::T ? TeleportSign::Plus : TeleportSign::Minus,
             g.id});
        cur[w] = ancilla;
        break;
      }
      case GateKind::MeasureZ:
        // Terminal by IR contract: becomes a computational basis read on
        // the mapped output, not part of the prefix.
        icm.output_reads.push_back(g.targets[0]);
        break;
      case GateKind::CNOT:
      case GateKind::CZ:
        emit(g.kind, cur[g.targets[0]], cur[g.targets[1]]);
        break;
      default:
        emit(g.kind, cur[g.targets[0]]);
        break;
    }
  }

  icm.wire_map = cur;
  icm.roles.assign(n + tcount, NodeRole::Ancilla);
  for (int w = 0; w < n; ++w) icm.roles[w] = NodeRole::Input;
  for (int w = 0; w < n; ++w) icm.roles[cur[w]] = NodeRole::Output;
  return icm;
}

StabilizerTableau prefix_final_tableau(const IcmCircuit& icm) {
  return simulate_clifford(icm.clifford_prefix);
}

std::string icm_to_text(const IcmCircuit& icm) {
  std::map<std::size_t, const TeleportedT*> by_position;
  // A teleportation's CNOT is the first gate touching its continuation wire.
  for (const TeleportedT& tp : icm.teleportations) {
    for (std::size_t i = 0; i < icm.clifford_prefix.gates.size(); ++i) {
      const Gate& g = icm.clifford_prefix.gates[i];
      if (g.kind == GateKind::CNOT && g.targets[0] == tp.measured_wire &&
          g.targets[1] == tp.continuation_wire) {
        by_position[i] = &tp;
        break;
      }
    }
  }

  std::ostringstream out;
  out << "qubits " << icm.clifford_prefix.num_wires << "\n";
  for (int w = 0; w < icm.clifford_prefix.num_wires; ++w)
    if (icm.clifford_prefix.initial_states[w] == InitState::Plus) out << "init " << w << " plus\n";
  for (std::size_t i = 0; i < icm.clifford_prefix.gates.size(); ++i) {
    const Gate& g = icm.clifford_prefix.gates[i];
    out << gate_name(g.kind);
    for (int w : g.targets) out << ' ' << w;
    out << "\n";
    auto it = by_position.find(i);
    if (it != by_position.end()) {
      const TeleportedT& tp = *it->second;
      out << "# teleport m" << tp.source_gate_id << ": wire " << tp.measured_wire
          << " consumed, continues on " << tp.continuation_wire << " ("
          << (tp.sign == TeleportSign::Plus ? "T" : "Tdg") << ")\n";
    }
  }
  return out.str();
}

}  // namespace graphc
