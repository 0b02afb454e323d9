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
#include <set>

#include "graphc/compile.hpp"
#include "graphc/verify.hpp"
#include "test_util.hpp"

using namespace graphc;

namespace {

const char* kControlledVdg =
    "qubits 2\ntdg 0\nh 1\ncnot 1 0\nt 0\ntdg 1\ncnot 1 0\nh 1\n";

CompiledPattern compile_text(const std::string& text) {
  return compile_circuit(parse_circuit(text)).pattern;
}

std::multiset<std::pair<LocalOp, int>> correction_set(const CompiledPattern& p) {
  std::multiset<std::pair<LocalOp, int>> out;
  for (const LocalCorrection& c : p.local_corrections) out.insert({c.op, c.qubit});
  return out;
}

}  // namespace

TEST_CASE("controlled-V^dag pattern shape") {
  CompiledPattern p = compile_text(kControlledVdg);
  CHECK(p.num_nodes() == 5);
  CHECK(p.graph.edge_count() == 2);
  CHECK(p.schedule.size() == 3);
  CHECK(p.t_count == 3);
  REQUIRE(p.output_corrections.size() == 2);
  CHECK(p.output_corrections[0].wire == 3);
  CHECK(p.output_corrections[1].wire == 4);
  CHECK(correction_set(p) == std::multiset<std::pair<LocalOp, int>>{
                                 {LocalOp::H, 0}, {LocalOp::H, 2}, {LocalOp::H, 3}});
}

TEST_CASE("GHZ pattern has no measurements and all-output roles") {
  CompiledPattern p = compile_text("qubits 3\nh 0\ncnot 0 1\ncnot 1 2\n");
  CHECK(p.num_nodes() == 3);
  CHECK(p.graph.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  CHECK(p.schedule.empty());
  CHECK(p.t_count == 0);
  for (NodeRole r : p.roles()) CHECK(r == NodeRole::Output);
}

TEST_CASE("GHZ pattern executes to the GHZ state") {
  CompiledPattern p = compile_text("qubits 3\nh 0\ncnot 0 1\ncnot 1 2\n");
  DenseState out = run_pattern(p, {});
  DenseState ghz = run_circuit(parse_circuit("qubits 3\nh 0\ncnot 0 1\ncnot 1 2\n"));
  CHECK(overlap_magnitude(out, ghz) > 1.0 - 1e-9);
}

TEST_CASE("pattern invariant: corrections reproduce the prefix group") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    CircuitIR c = testutil::random_clifford_t_circuit(1 + static_cast<int>(rng() % 4), 12,
                                                      static_cast<int>(rng() % 5), rng);
    CompileResult r = compile_circuit(c);
    StabilizerTableau via_graph =
        apply_corrections_inverse(r.pattern.graph, r.pattern.local_corrections);
    CHECK(same_stabilizer_group(via_graph, prefix_final_tableau(r.icm)));

    // Output nodes never appear in the schedule.
    for (const ScheduledMeasurement& m : r.pattern.schedule)
      CHECK(r.pattern.roles()[m.wire] != NodeRole::Output);
    CHECK(static_cast<int>(r.pattern.schedule.size()) == r.pattern.t_count);
  }
}

TEST_CASE("JSON round trip is lossless") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    CircuitIR c = testutil::random_clifford_t_circuit(1 + static_cast<int>(rng() % 4), 10,
                                                      static_cast<int>(rng() % 5), rng);
    CompiledPattern p = compile_circuit(c).pattern;
    CompiledPattern back = pattern_from_json(pattern_to_json(p));
    CHECK(back == p);
  }
}

TEST_CASE("JSON output is byte-stable") {
  CompiledPattern p = compile_text(kControlledVdg);
  CHECK(pattern_to_json(p) == pattern_to_json(compile_text(kControlledVdg)));
}

TEST_CASE("GHZ edges serialize in canonical order") {
  std::string text = pattern_to_json(compile_text("qubits 3\nh 0\ncnot 0 1\ncnot 1 2\n"));
  CHECK(text.find("\"version\": \"graphc/1\"") != std::string::npos);
  CHECK(text.find("[\n      0,\n      1\n    ]") != std::string::npos);
  CompiledPattern back = pattern_from_json(text);
  CHECK(back.graph.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
}

TEST_CASE("schema violations carry a JSON pointer") {
  CompiledPattern p = compile_text(kControlledVdg);
  std::string text = pattern_to_json(p);

  CHECK_THROWS_AS(pattern_from_json(text.substr(0, text.size() / 2)), SchemaError);
  CHECK_THROWS_AS(pattern_from_json("{}"), SchemaError);

  std::string bad_angle = text;
  bad_angle.replace(bad_angle.find("-pi/4"), 5, "-pi/3");
  try {
    pattern_from_json(bad_angle);
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(e.pointer.find("/measurements/") != std::string::npos);
    CHECK(e.pointer.find("/angle") != std::string::npos);
  }

  std::string bad_version = text;
  bad_version.replace(bad_version.find("graphc/1"), 8, "graphc/9");
  CHECK_THROWS_AS(pattern_from_json(bad_version), SchemaError);

  std::string dup_symbol = text;
  dup_symbol.replace(dup_symbol.find("\"m3\""), 4, "\"m0\"");
  CHECK_THROWS_AS(pattern_from_json(dup_symbol), SchemaError);
}

TEST_CASE("DOT rendering is deterministic and role-colored") {
  CompiledPattern p = compile_text(kControlledVdg);
  std::string dot = pattern_to_dot(p);
  CHECK(dot == pattern_to_dot(p));
  CHECK(dot.find("0 [fillcolor=palegreen") != std::string::npos);   // input
  CHECK(dot.find("3 [fillcolor=lightblue") != std::string::npos);    // output
  CHECK(dot.find("2 [fillcolor=lightgray") != std::string::npos);    // ancilla
  CHECK(dot.find("1 -- 2;") != std::string::npos);
  CHECK(dot.find("1 -- 4;") != std::string::npos);

  std::string single = graph_to_dot(GraphState(1));
  CHECK(single.find("0 [") != std::string::npos);
  CHECK(single.find("--") == std::string::npos);
}

TEST_CASE("assemble rejects mismatched inputs") {
  CircuitIR c = parse_circuit(kControlledVdg);
  IcmCircuit icm = to_inverse_icm(c);
  GraphExtraction ext = to_graph(prefix_final_tableau(icm));
  ext.graph.roles = icm.roles;
  TrackResult tracked = track(icm);

  TrackResult broken = tracked;
  broken.schedule.pop_back();
  CHECK_THROWS_AS(assemble(icm, ext, broken), std::invalid_argument);

  TrackResult moved = tracked;
  moved.schedule[0].wire = icm.wire_map[0];  // schedule an output wire
  CHECK_THROWS_AS(assemble(icm, ext, moved), std::invalid_argument);
}
