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

#include "graphc/pauli_tracker.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace graphc {

namespace {

void symmetric_difference_into(SymbolSet& dst, const SymbolSet& src) {
  for (OutcomeSymbol s : src) {
    auto [it, inserted] = dst.insert(s);
    if (!inserted) dst.erase(it);
  }
}

}  // namespace

std::string symbol_name(OutcomeSymbol s) { return "m" + std::to_string(s); }

TrackResult track(const IcmCircuit& icm) {
  const int total = icm.clifford_prefix.num_wires;
  PauliFrame frame{std::vector<SymbolSet>(total), std::vector<SymbolSet>(total)};

  // Injection points: the byproduct Z^s appears on the continuation wire
  // right after the teleportation CNOT, which is the first gate touching
  // that wire.
  std::vector<const TeleportedT*> inject_after(icm.clifford_prefix.gates.size(), nullptr);
  for (const TeleportedT& tp : icm.teleportations) {
    bool placed = false;
    for (std::size_t i = 0; i < icm.clifford_prefix.gates.size() && !placed; ++i) {
      const Gate& g = icm.clifford_prefix.gates[i];
      for (int w : g.targets) {
        if (w == tp.continuation_wire) {
          if (g.kind != GateKind::CNOT || g.targets[0] != tp.measured_wire ||
              g.targets[1] != tp.continuation_wire)
            throw std::logic_error("continuation wire not first touched by its teleport CNOT");
          inject_after[i] = &tp;
          placed = true;
          break;
        }
      }
    }
    if (!placed) throw std::logic_error("teleportation CNOT missing from prefix");
  }

  for (std::size_t i = 0; i < icm.clifford_prefix.gates.size(); ++i) {
    const Gate& g = icm.clifford_prefix.gates[i];
    switch (g.kind) {
      case GateKind::H: {
        int q = g.targets[0];
        std::swap(frame.x_deps[q], frame.z_deps[q]);
        break;
      }
      case GateKind::S:
      case GateKind::Sdg: {
        // X -> Y: an X byproduct gains a Z component, signs are folded
        // into outcome relabeling.
        int q = g.targets[0];
        symmetric_difference_into(frame.z_deps[q], frame.x_deps[q]);
        break;
      }
      case GateKind::X:
      case GateKind::Y:
      case GateKind::Z:
        break;  // Pauli gates only touch signs, never the frame support.
      case GateKind::CNOT: {
        int a = g.targets[0], b = g.targets[1];
        symmetric_difference_into(frame.x_deps[b], frame.x_deps[a]);
        symmetric_difference_into(frame.z_deps[a], frame.z_deps[b]);
        break;
      }
      case GateKind::CZ: {
        int a = g.targets[0], b = g.targets[1];
        symmetric_difference_into(frame.z_deps[b], frame.x_deps[a]);
        symmetric_difference_into(frame.z_deps[a], frame.x_deps[b]);
        break;
      }
      default:
        throw std::invalid_argument("non-Clifford gate in ICM prefix");
    }
    if (inject_after[i]) {
      auto [it, inserted] =
          frame.z_deps[inject_after[i]->continuation_wire].insert(inject_after[i]->source_gate_id);
      if (!inserted) frame.z_deps[inject_after[i]->continuation_wire].erase(it);
    }
  }

  TrackResult result;
  std::map<OutcomeSymbol, int> round_of;
  for (const TeleportedT& tp : icm.teleportations) {
    ScheduledMeasurement m;
    m.wire = tp.measured_wire;
    m.symbol = tp.source_gate_id;
    m.angle = tp.sign == TeleportSign::Plus ? MeasureAngle::PlusPi4 : MeasureAngle::MinusPi4;
    m.basis_flip_deps = frame.x_deps[tp.measured_wire];
    m.outcome_relabel_deps = frame.z_deps[tp.measured_wire];

    int round = 0;
    for (OutcomeSymbol dep : m.basis_flip_deps) {
      auto it = round_of.find(dep);
      if (it == round_of.end())
        throw std::logic_error("basis flip depends on a later measurement");
      round = std::max(round, it->second + 1);
    }
    m.round = round;
    round_of[m.symbol] = round;
    result.schedule.push_back(std::move(m));
  }

  for (int logical = 0; logical < icm.num_original_wires(); ++logical) {
    int wire = icm.wire_map[logical];
    result.outputs.push_back({wire, frame.x_deps[wire], frame.z_deps[wire]});
  }
  return result;
}

bool parity_of(const SymbolSet& deps, const OutcomeAssignment& outcomes) {
  bool parity = false;
  for (OutcomeSymbol s : deps) {
    auto it = outcomes.find(s);
    if (it == outcomes.end())
      throw std::out_of_range("missing outcome for symbol " + symbol_name(s));
    parity = parity != it->second;
  }
  return parity;
}

ResolvedBasis resolve_basis(const ScheduledMeasurement& m, const OutcomeAssignment& outcomes) {
  double base = m.angle == MeasureAngle::PlusPi4 ? std::numbers::pi / 4 : -std::numbers::pi / 4;
  bool flip = parity_of(m.basis_flip_deps, outcomes);
  bool relabel = parity_of(m.outcome_relabel_deps, outcomes);
  return {flip ? -base : base, relabel};
}

}  // namespace graphc
