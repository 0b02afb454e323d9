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

#include "graphc/graph_extract.hpp"
#include "graphc/icm.hpp"
#include "graphc/pauli_tracker.hpp"

namespace graphc {

inline constexpr const char* kPatternVersion = "graphc/1";

/// The full compiler output: graph, local corrections, feed-forward
/// measurement schedule, output corrections and wire roles. This is the
/// unit of serialization and verification. Qubits are 0-indexed.
struct CompiledPattern {
  GraphState graph;  // roles ride on the graph nodes
  /// Graph-to-pre-measurement-state direction, applied in list order.
  std::vector<LocalCorrection> local_corrections;
  std::vector<ScheduledMeasurement> schedule;
  /// In logical wire order.
  std::vector<OutputCorrection> output_corrections;
  std::vector<InitState> input_labels;
  int t_count = 0;

  int num_nodes() const { return graph.n; }
  const std::vector<NodeRole>& roles() const { return graph.roles; }

  friend bool operator==(const CompiledPattern&, const CompiledPattern&) = default;
};

struct SchemaError : std::runtime_error {
  std::string pointer;
  SchemaError(std::string ptr, const std::string& msg)
      : std::runtime_error(msg + " (at " + ptr + ")"), pointer(std::move(ptr)) {}
};

/// Stitch the pipeline stages into one pattern. All inputs must come from
/// the same circuit; throws std::invalid_argument on role/wire mismatch.
CompiledPattern assemble(const IcmCircuit& icm, const GraphExtraction& ext,
                         const TrackResult& tracked);

/// Canonical JSON, byte-identical across runs for the same input.
std::string pattern_to_json(const CompiledPattern& p);

/// Parse and validate; throws SchemaError with a JSON pointer path.
CompiledPattern pattern_from_json(const std::string& text);

std::string pattern_to_dot(const CompiledPattern& p);

}  // namespace graphc
