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

#include "graphc/lc_optimize.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace graphc {

int objective_value(const GraphState& g, Objective obj) {
  if (obj == Objective::EdgeCount) return g.edge_count();
  int best = 0;
  for (int v = 0; v < g.n; ++v) best = std::max(best, g.degree(v));
  return best;
}

GraphState local_complement(const GraphState& g, int k) {
  if (k < 0 || k >= g.n) throw std::out_of_range("local complementation vertex out of range");
  GraphState out = g;
  auto nbrs = g.neighbors(k);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) out.toggle_edge(nbrs[i], nbrs[j]);
  return out;
}

CompiledPattern lc_with_corrections(const CompiledPattern& p, int k) {
  CompiledPattern out = p;
  out.graph = local_complement(p.graph, k);

  // |tau_k(G)> = sqrt(-iX_k) prod_{j in n_k} sqrt(iZ_j) |G>, so the new
  // corrections start with the inverse: sqrt(iX_k) = H Pdag H up to a
  // global phase, sqrt(-iZ_j) = P up to a global phase.
  std::vector<LocalCorrection> prefix;
  prefix.push_back({k, LocalOp::H});
  prefix.push_back({k, LocalOp::Pdag});
  prefix.push_back({k, LocalOp::H});
  for (int j : p.graph.neighbors(k)) prefix.push_back({j, LocalOp::P});

  prefix.insert(prefix.end(), p.local_corrections.begin(), p.local_corrections.end());
  out.local_corrections = std::move(prefix);
  return out;
}

OptimizeResult optimize(const CompiledPattern& p, Objective obj, int budget) {
  if (budget < 0) throw std::invalid_argument("optimize budget must be non-negative");
  OptimizeResult result{p, {}};
  int current = objective_value(result.pattern.graph, obj);

  for (int step = 0; step < budget; ++step) {
    int best_vertex = -1;
    int best_value = current;
    for (int k = 0; k < result.pattern.graph.n; ++k) {
      int candidate = objective_value(local_complement(result.pattern.graph, k), obj);
      if (candidate < best_value) {
        best_value = candidate;
        best_vertex = k;
      }
    }
    if (best_vertex < 0) break;  // local minimum
    result.pattern = lc_with_corrections(result.pattern, best_vertex);
    result.applied.push_back({best_vertex});
    current = best_value;
  }
  return result;
}

namespace {

std::string adjacency_key(const GraphState& g) {
  std::string key(static_cast<std::size_t>(g.n) * g.n, '0');
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      if (g.adjacency[a].get(b)) key[static_cast<std::size_t>(a) * g.n + b] = '1';
  return key;
}

}  // namespace

OptimizeResult optimize_exhaustive(const CompiledPattern& p, Objective obj,
                                   std::size_t visit_cap) {
  if (p.graph.n > 10)
    throw std::invalid_argument("exhaustive orbit search is limited to 10 nodes");

  struct Node {
    GraphState graph;
    int parent;
    int move;
  };
  std::vector<Node> nodes;
  std::map<std::string, int> seen;
  std::deque<int> frontier;

  nodes.push_back({p.graph, -1, -1});
  seen[adjacency_key(p.graph)] = 0;
  frontier.push_back(0);

  int best_index = 0;
  int best_value = objective_value(p.graph, obj);

  while (!frontier.empty() && nodes.size() < visit_cap) {
    int at = frontier.front();
    frontier.pop_front();
    for (int k = 0; k < p.graph.n; ++k) {
      GraphState next = local_complement(nodes[at].graph, k);
      std::string key = adjacency_key(next);
      if (seen.count(key)) continue;
      seen[key] = static_cast<int>(nodes.size());
      int value = objective_value(next, obj);
      nodes.push_back({std::move(next), at, k});
      frontier.push_back(static_cast<int>(nodes.size()) - 1);
      if (value < best_value) {
        best_value = value;
        best_index = static_cast<int>(nodes.size()) - 1;
      }
    }
  }

  std::vector<LcMove> moves;
  for (int at = best_index; nodes[at].parent >= 0; at = nodes[at].parent)
    moves.push_back({nodes[at].move});
  std::reverse(moves.begin(), moves.end());

  OptimizeResult result{p, {}};
  for (const LcMove& mv : moves) {
    result.pattern = lc_with_corrections(result.pattern, mv.vertex);
    result.applied.push_back(mv);
  }
  return result;
}

}  // namespace graphc
