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

#include <map>
#include <set>
#include <vector>

#include "graphc/icm.hpp"

namespace graphc {

/// Outcome symbols name one teleportation's measurement bit. They are the
/// source gate id of the teleported T/Tdg, rendered as "m<id>" in text.
using OutcomeSymbol = int;
using SymbolSet = std::set<OutcomeSymbol>;
using OutcomeAssignment = std::map<OutcomeSymbol, bool>;

std::string symbol_name(OutcomeSymbol s);

/// Per-wire X/Z byproduct dependency sets.
struct PauliFrame {
  std::vector<SymbolSet> x_deps;
  std::vector<SymbolSet> z_deps;
};

enum class MeasureAngle { PlusPi4, MinusPi4 };

/// One pending rotated-basis measurement of the compiled pattern.
struct ScheduledMeasurement {
  int wire;
  OutcomeSymbol symbol;
  MeasureAngle angle;
  /// Odd parity of these outcomes flips the measured angle's sign
  /// (X-type byproducts); forces temporal ordering.
  SymbolSet basis_flip_deps;
  /// Odd parity relabels the raw outcome (Z-type byproducts); pure
  /// classical post-processing, no ordering.
  SymbolSet outcome_relabel_deps;
  int round = 0;

  friend bool operator==(const ScheduledMeasurement&, const ScheduledMeasurement&) = default;
};

struct OutputCorrection {
  int wire;
  SymbolSet x_deps;
  SymbolSet z_deps;

  friend bool operator==(const OutputCorrection&, const OutputCorrection&) = default;
};

struct TrackResult {
  std::vector<ScheduledMeasurement> schedule;
  /// In logical wire order (entry l corresponds to wire_map[l]).
  std::vector<OutputCorrection> outputs;
};

/// Propagate the Z byproduct of every teleportation through the rest of
/// the Clifford prefix. Byproducts reaching a measured wire become basis
/// flips (X part) or outcome relabels (Z part); residual frames on output
/// wires become output corrections. Rounds are the longest-path layering
/// of the basis-flip dependency DAG.
TrackResult track(const IcmCircuit& icm);

struct ResolvedBasis {
  double angle;  // signed angle of the observable A(angle)
  bool relabel;
};

/// Fold known outcomes into a measurement: the angle sign flips on odd
/// basis-flip parity, the relabel bit is the relabel-dep parity. Throws
/// std::out_of_range when a dependency outcome is missing.
ResolvedBasis resolve_basis(const ScheduledMeasurement& m, const OutcomeAssignment& outcomes);

bool parity_of(const SymbolSet& deps, const OutcomeAssignment& outcomes);

}  // namespace graphc
