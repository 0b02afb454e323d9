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

#include "graphc/graph_state.hpp"

#include <algorithm>
#include <sstream>

namespace graphc {

const char* role_name(NodeRole r) {
  switch (r) {
    case NodeRole::Input: return "input";
    case NodeRole::Output: return "output";
    case NodeRole::Ancilla: return "ancilla";
  }
  return "?";
}

int GraphState::edge_count() const {
  int total = 0;
  for (int a = 0; a < n; ++a) total += degree(a);
  return total / 2;
}

std::vector<int> GraphState::neighbors(int a) const {
  std::vector<int> out;
  for (int b = 0; b < n; ++b)
    if (adjacency[a].get(b)) out.push_back(b);
  return out;
}

std::vector<std::pair<int, int>> GraphState::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (adjacency[a].get(b)) out.emplace_back(a, b);
  return out;
}

const char* local_op_name(LocalOp op) {
  switch (op) {
    case LocalOp::H: return "H";
    case LocalOp::P: return "P";
    case LocalOp::Pdag: return "Pdag";
    case LocalOp::Z: return "Z";
  }
  return "?";
}

LocalOp local_op_inverse(LocalOp op) {
  switch (op) {
    case LocalOp::P: return LocalOp::Pdag;
    case LocalOp::Pdag: return LocalOp::P;
    default: return op;
  }
}

std::vector<LocalCorrection> inverted(const std::vector<LocalCorrection>& corr) {
  std::vector<LocalCorrection> out;
  out.reserve(corr.size());
  for (auto it = corr.rbegin(); it != corr.rend(); ++it)
    out.push_back({it->qubit, local_op_inverse(it->op)});
  return out;
}

std::string graph_to_dot(const GraphState& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  out << "  node [shape=circle, style=filled];\n";
  for (int v = 0; v < g.n; ++v) {
    const char* color = "lightgray";
    if (g.roles[v] == NodeRole::Input) color = "palegreen";
    if (g.roles[v] == NodeRole::Output) color = "lightblue";
    out << "  " << v << " [fillcolor=" << color << ", label=\"" << v << "\"];\n";
  }
  for (auto [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace graphc
