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

#include <optional>

#include "graphc/lc_optimize.hpp"
#include "graphc/pattern.hpp"

namespace graphc {

struct CompileOptions {
  std::optional<Objective> optimize;  // nullopt: leave the extracted graph alone
  int budget = 100;
  bool exhaustive = false;
};

struct CompileResult {
  CompiledPattern pattern;
  IcmCircuit icm;
  std::vector<LcMove> lc_moves;
};

/// The full pipeline: inverse-ICM rewrite, Clifford prefix simulation,
/// graph extraction, Pauli tracking, assembly, optional LC optimization.
/// Deterministic for a given circuit.
CompileResult compile_circuit(const CircuitIR& circuit, const CompileOptions& opts = {});

}  // namespace graphc
