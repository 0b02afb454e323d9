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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "graphc/compile.hpp"
#include "graphc/lc_optimize.hpp"
#include "graphc/verify.hpp"
#include "test_util.hpp"

using namespace graphc;

namespace {

using Edges = std::vector<std::pair<int, int>>;

GraphState star3() {
  GraphState g(3);
  g.set_edge(0, 1, true);
  g.set_edge(0, 2, true);
  return g;
}

GraphState triangle() {
  GraphState g = star3();
  g.set_edge(1, 2, true);
  return g;
}

/// Pre-measurement state represented by a pattern.
DenseState represented_state(const CompiledPattern& p) {
  DenseState s = DenseState::from_graph(p.graph);
  for (const LocalCorrection& c : p.local_corrections) s.apply_local_correction(c);
  return s;
}

CompiledPattern ghz_pattern() {
  return compile_circuit(parse_circuit("qubits 3\nh 0\ncnot 0 1\ncnot 1 2\n")).pattern;
}

CompiledPattern random_pattern(int wires, std::mt19937_64& rng) {
  CircuitIR c = testutil::random_clifford_circuit(wires, 30, rng);
  return compile_circuit(c).pattern;
}

}  // namespace

TEST_CASE("local complementation of the star is the triangle") {
  CHECK(local_complement(star3(), 0).edges() == triangle().edges());
}

TEST_CASE("complementing an isolated vertex changes nothing") {
  GraphState g = star3();
  GraphState bigger(4);
  for (auto [a, b] : g.edges()) bigger.set_edge(a, b, true);
  CHECK(local_complement(bigger, 3).edges() == bigger.edges());
}

TEST_CASE("triangle complements back to the star") {
  CHECK(local_complement(triangle(), 0).edges() == star3().edges());
}

TEST_CASE("local complementation is an involution at fixed vertex") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    GraphState g(n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() & 1) g.set_edge(a, b, true);
    int k = static_cast<int>(rng() % n);
    CHECK(local_complement(local_complement(g, k), k).edges() == g.edges());
  }
}

TEST_CASE("vertex out of range is rejected") {
  CHECK_THROWS_AS(local_complement(star3(), 3), std::out_of_range);
}

TEST_CASE("lc_with_corrections preserves the represented state") {
  CompiledPattern p = ghz_pattern();
  DenseState before = represented_state(p);

  CompiledPattern moved = lc_with_corrections(p, 0);
  CHECK(moved.graph.edges() == triangle().edges());
  CHECK(overlap_magnitude(represented_state(moved), before) > 1.0 - 1e-9);
  CHECK(same_stabilizer_group(apply_corrections_inverse(moved.graph, moved.local_corrections),
                              apply_corrections_inverse(p.graph, p.local_corrections)));

  // Moving on an isolated vertex keeps the graph and the state.
  CompiledPattern cv = compile_circuit(parse_circuit(
      "qubits 2\ntdg 0\nh 1\ncnot 1 0\nt 0\ntdg 1\ncnot 1 0\nh 1\n")).pattern;
  CompiledPattern iso = lc_with_corrections(cv, 0);
  CHECK(iso.graph.edges() == cv.graph.edges());
  CHECK(overlap_magnitude(represented_state(iso), represented_state(cv)) > 1.0 - 1e-9);

  // Double application restores the graph and the state group.
  CompiledPattern twice = lc_with_corrections(moved, 0);
  CHECK(twice.graph.edges() == p.graph.edges());
  CHECK(overlap_magnitude(represented_state(twice), before) > 1.0 - 1e-9);
}

TEST_CASE("optimize turns the triangle into a two-edge graph in one move") {
  CompiledPattern p = ghz_pattern();
  CompiledPattern tri = lc_with_corrections(p, 0);
  REQUIRE(tri.graph.edge_count() == 3);

  OptimizeResult r = optimize(tri, Objective::EdgeCount, 100);
  CHECK(r.applied.size() == 1);
  CHECK(r.pattern.graph.edge_count() == 2);
  CHECK(overlap_magnitude(represented_state(r.pattern), represented_state(p)) > 1.0 - 1e-9);
}

TEST_CASE("an already-minimal star takes zero moves") {
  OptimizeResult r = optimize(ghz_pattern(), Objective::EdgeCount, 100);
  CHECK(r.applied.empty());
  CHECK(r.pattern == ghz_pattern());
}

TEST_CASE("optimization is monotone, state-preserving and replayable") {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 20; ++trial) {
    CompiledPattern p = random_pattern(8, rng);
    Objective obj = trial % 2 ? Objective::EdgeCount : Objective::MaxDegree;
    int before = objective_value(p.graph, obj);

    OptimizeResult r = optimize(p, obj, 25);
    CHECK(objective_value(r.pattern.graph, obj) <= before);

    // Objective is non-increasing along the move sequence and the final
    // result replays from the certificate.
    CompiledPattern replay = p;
    int last = before;
    for (const LcMove& mv : r.applied) {
      replay = lc_with_corrections(replay, mv.vertex);
      int now = objective_value(replay.graph, obj);
      CHECK(now <= last);
      last = now;
    }
    CHECK(replay == r.pattern);
    CHECK(overlap_magnitude(represented_state(r.pattern), represented_state(p)) > 1.0 - 1e-9);
  }
}

TEST_CASE("optimize respects the move budget") {
  std::mt19937_64 rng(73);
  CompiledPattern p = random_pattern(8, rng);
  OptimizeResult r = optimize(p, Objective::EdgeCount, 1);
  CHECK(r.applied.size() <= 1);
}

TEST_CASE("roles survive optimization") {
  CompiledPattern cv = compile_circuit(parse_circuit(
      "qubits 2\ntdg 0\nh 1\ncnot 1 0\nt 0\ntdg 1\ncnot 1 0\nh 1\n")).pattern;
  OptimizeResult r = optimize(cv, Objective::EdgeCount, 10);
  CHECK(r.pattern.roles() == cv.roles());
}

TEST_CASE("exhaustive orbit search never loses to greedy") {
  std::mt19937_64 rng(74);
  for (int trial = 0; trial < 5; ++trial) {
    CompiledPattern p = random_pattern(6, rng);
    OptimizeResult greedy = optimize(p, Objective::EdgeCount, 50);
    OptimizeResult full = optimize_exhaustive(p, Objective::EdgeCount);
    CHECK(objective_value(full.pattern.graph, Objective::EdgeCount) <=
          objective_value(greedy.pattern.graph, Objective::EdgeCount));
    CHECK(overlap_magnitude(represented_state(full.pattern), represented_state(p)) > 1.0 - 1e-9);
  }
}
