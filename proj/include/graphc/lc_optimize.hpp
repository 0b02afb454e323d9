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

#include <vector>

#include "graphc/pattern.hpp"

namespace graphc {

struct LcMove {
  int vertex;
  friend bool operator==(const LcMove&, const LcMove&) = default;
};

enum class Objective { EdgeCount, MaxDegree };

int objective_value(const GraphState& g, Objective obj);

/// Toggle every edge among the neighbors of k; all other edges unchanged.
GraphState local_complement(const GraphState& g, int k);

/// Locally complement the pattern's graph at k and prepend the inverse of
/// the physical complementation unitary to the local corrections, so the
/// represented pre-measurement state is unchanged. The prepended ops are
/// the {H, P, Pdag} decomposition of sqrt(iX) on k and sqrt(-iZ) on each
/// neighbor, global phase dropped.
CompiledPattern lc_with_corrections(const CompiledPattern& p, int k);

struct OptimizeResult {
  CompiledPattern pattern;
  std::vector<LcMove> applied;
};

/// Greedy steepest descent over single LC moves; ties break toward the
/// lowest vertex index. Stops at the move budget or a local minimum.
/// The objective never increases.
OptimizeResult optimize(const CompiledPattern& p, Objective obj, int budget);

/// Breadth-first search of the whole LC orbit (n <= 10). The visited-set
/// cap keeps pathological orbits bounded; the best graph found wins.
OptimizeResult optimize_exhaustive(const CompiledPattern& p, Objective obj,
                                   std::size_t visit_cap = std::size_t{1} << 20);

}  // namespace graphc
