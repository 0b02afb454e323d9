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
#include <utility>
#include <vector>

#include "graphc/bitvec.hpp"

namespace graphc {

enum class NodeRole { Input, Output, Ancilla };

const char* role_name(NodeRole r);

/// Undirected simple graph plus per-node pipeline roles. The adjacency
/// matrix is kept symmetric with a zero diagonal.
struct GraphState {
  int n = 0;
  std::vector<BitVec> adjacency;
  std::vector<NodeRole> roles;

  explicit GraphState(int nodes = 0)
      : n(nodes), adjacency(nodes, BitVec(nodes)), roles(nodes, NodeRole::Ancilla) {}

  bool has_edge(int a, int b) const { return adjacency[a].get(b); }
  void set_edge(int a, int b, bool v) {
    adjacency[a].set(b, v);
    adjacency[b].set(a, v);
  }
  void toggle_edge(int a, int b) {
    adjacency[a].flip(b);
    adjacency[b].flip(a);
  }

  int degree(int a) const { return static_cast<int>(adjacency[a].popcount()); }
  int edge_count() const;
  std::vector<int> neighbors(int a) const;
  /// Edge list with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const GraphState&, const GraphState&) = default;
};

/// Single-qubit correction op. P is the phase gate S, Pdag its inverse.
enum class LocalOp { H, P, Pdag, Z };

const char* local_op_name(LocalOp op);
LocalOp local_op_inverse(LocalOp op);

struct LocalCorrection {
  int qubit;
  LocalOp op;

  friend bool operator==(const LocalCorrection&, const LocalCorrection&) = default;
};

/// Inverse of a correction sequence: reversed order, each op inverted.
std::vector<LocalCorrection> inverted(const std::vector<LocalCorrection>& corr);

/// DOT rendering, nodes colored by role (input green, output blue,
/// ancilla gray). Deterministic output.
std::string graph_to_dot(const GraphState& g, const std::string& name = "pattern");

}  // namespace graphc
