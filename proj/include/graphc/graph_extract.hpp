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

#include "graphc/graph_state.hpp"
#include "graphc/tableau.hpp"

namespace graphc {

/// Result of converting a stabilizer state to a graph state.
///
/// `corrections` is stored in graph-to-original direction: applying the
/// listed ops in order to the graph state's canonical tableau reproduces
/// the input stabilizer group. The conversion itself emits {H, Pdag, Z};
/// the stored list is the inverted sequence, so its ops are {H, P, Z}.
struct GraphExtraction {
  GraphState graph;
  std::vector<LocalCorrection> corrections;

  /// The ops the conversion applied, in application order
  /// (original-to-graph direction).
  std::vector<LocalCorrection> conversion_ops() const { return inverted(corrections); }
};

/// Gaussian elimination over GF(2) augmented with local Cliffords:
/// brings the tableau to the form [I | A | all +] with A symmetric and
/// zero-diagonal. Row operations are not recorded (they are not physical);
/// every emitted H / Pdag / Z is. O(n^3).
///
/// Throws std::invalid_argument when the tableau is malformed
/// (rank-deficient or non-commuting generators).
GraphExtraction to_graph(const StabilizerTableau& t);

/// Canonical tableau of a graph state: X block identity, Z block the
/// adjacency matrix, all signs +.
StabilizerTableau graph_to_tableau(const GraphState& g);

/// Apply a stored correction list to the graph's canonical tableau. With
/// corrections produced by to_graph this reproduces a tableau generating
/// the same stabilizer group as the conversion input.
StabilizerTableau apply_corrections_inverse(const GraphState& g,
                                            const std::vector<LocalCorrection>& corr);

/// Apply one local correction to an arbitrary tableau.
void apply_local_op(StabilizerTableau& t, const LocalCorrection& c);

}  // namespace graphc
