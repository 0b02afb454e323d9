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

#include "graphc/graph_extract.hpp"

#include <stdexcept>

namespace graphc {

GraphExtraction to_graph(const StabilizerTableau& input) {
  if (!input.is_valid())
    throw std::invalid_argument("to_graph: malformed tableau (rank-deficient or non-commuting)");

  StabilizerTableau t = input;
  const int n = t.num_qubits();
  std::vector<LocalCorrection> emitted;

  auto hadamard = [&](int q) {
    t.h(q);
    emitted.push_back({q, LocalOp::H});
  };

  // Make the X block upper triangular with a unit diagonal, pulling
  // columns over from the Z block when a lower X column is empty.
  for (int i = 0; i < n; ++i) {
    bool have_x = false;
    for (int r = i; r < n; ++r) have_x = have_x || t.x_bit(r, i);
    if (!have_x) hadamard(i);

    int pivot = -1;
    for (int r = i; r < n; ++r)
      if (t.x_bit(r, i)) {
        pivot = r;
        break;
      }
    if (pivot < 0)
      throw std::invalid_argument("to_graph: no pivot available, tableau is malformed");
    if (pivot != i) t.swap_rows(i, pivot);
    for (int r = i + 1; r < n; ++r)
      if (t.x_bit(r, i)) t.rowsum(i, r);
  }

  // Back-substitute to make the X block the identity.
  for (int col = n - 1; col >= 1; --col)
    for (int r = 0; r < col; ++r)
      if (t.x_bit(r, col)) t.rowsum(col, r);

  // Fix signs with Z, clear the Z diagonal with Pdag.
  for (int i = 0; i < n; ++i) {
    if (t.sign_bit(i)) {
      t.z(i);
      emitted.push_back({i, LocalOp::Z});
    }
    if (t.z_bit(i, i)) {
      t.sdg(i);
      emitted.push_back({i, LocalOp::Pdag});
    }
  }

  GraphExtraction out;
  out.graph = GraphState(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (t.z_bit(r, c)) out.graph.adjacency[r].set(c, true);

  for (int r = 0; r < n; ++r) {
    if (t.sign_bit(r) || t.z_bit(r, r))
      throw std::logic_error("to_graph: output not in graph form");
    for (int c = 0; c < n; ++c) {
      if (t.x_bit(r, c) != (r == c))
        throw std::logic_error("to_graph: X block is not the identity");
      if (t.z_bit(r, c) != t.z_bit(c, r))
        throw std::logic_error("to_graph: Z block is not symmetric");
    }
  }

  out.corrections = inverted(emitted);
  return out;
}

StabilizerTableau graph_to_tableau(const GraphState& g) {
  std::vector<InitState> init(g.n, InitState::Plus);
  StabilizerTableau t(init);
  // X_i on the diagonal is already in place; add Z on each neighbor.
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      if (g.has_edge(a, b)) t.cz(a, b);
  return t;
}

void apply_local_op(StabilizerTableau& t, const LocalCorrection& c) {
  switch (c.op) {
    case LocalOp::H: t.h(c.qubit); break;
    case LocalOp::P: t.s(c.qubit); break;
    case LocalOp::Pdag: t.sdg(c.qubit); break;
    case LocalOp::Z: t.z(c.qubit); break;
  }
}

StabilizerTableau apply_corrections_inverse(const GraphState& g,
                                            const std::vector<LocalCorrection>& corr) {
  StabilizerTableau t = graph_to_tableau(g);
  for (const LocalCorrection& c : corr) apply_local_op(t, c);
  return t;
}

}  // namespace graphc
