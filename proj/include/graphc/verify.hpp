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
#include <string>

#include "graphc/dense_sim.hpp"
#include "graphc/pattern.hpp"

namespace graphc {

/// Execute a compiled pattern for one prescribed outcome assignment:
/// build the graph state, apply the local corrections, project every
/// scheduled wire in its resolved basis (tracing it out), then apply the
/// outcome-dependent output corrections. The returned register is ordered
/// by logical wire. `weight_out`, when given, receives the branch
/// probability (2^-t_count for a correct pattern).
DenseState run_pattern(const CompiledPattern& p, const OutcomeAssignment& outcomes,
                       int cap = kDefaultQubitCap, double* weight_out = nullptr);

struct VerifyOptions {
  double tolerance = 1e-9;
  int cap = kDefaultQubitCap;
  /// Enumerate all branches up to this T count, sample above it.
  int exhaustive_limit = 8;
  int sample_count = 256;
  uint64_t seed = 0;
};

struct VerifyReport {
  bool ok = true;
  int branches_checked = 0;
  double min_overlap = 1.0;
  std::optional<OutcomeAssignment> first_failure;
  std::string note;

  std::string failure_string() const;
};

/// Compare compiled-pattern execution against direct simulation of the
/// circuit for every enumerated (or sampled) outcome branch. Terminal
/// measurements in the circuit are ignored; the comparison is on the
/// pre-readout state.
VerifyReport verify_pattern(const CircuitIR& circuit, const CompiledPattern& p,
                            const VerifyOptions& opts = {});

/// As above but against a caller-supplied ideal state on the output register.
VerifyReport verify_pattern_against(const DenseState& ideal, const CompiledPattern& p,
                                    const VerifyOptions& opts = {});

}  // namespace graphc
