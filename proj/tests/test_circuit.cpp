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

#include "graphc/circuit.hpp"
#include "test_util.hpp"

using namespace graphc;

namespace {

const char* kGhz = "qubits 3\nh 0\ncnot 0 1\ncnot 1 2\n";

const char* kControlledVdg =
    "qubits 2\n"
    "tdg 0\n"
    "h 1\n"
    "cnot 1 0\n"
    "t 0\n"
    "tdg 1\n"
    "cnot 1 0\n"
    "h 1\n";

const char* kToffoli =
    "qubits 3\n"
    "t 0\nt 1\nh 2\n"
    "cnot 0 1\nt 2\ncnot 1 2\n"
    "tdg 1\nt 2\ncnot 0 1\ncnot 1 2\n"
    "cnot 0 1\ntdg 2\ncnot 1 2\n"
    "cnot 0 1\ntdg 2\ncnot 1 2\nh 2\n";

}  // namespace

TEST_CASE("GHZ circuit parses into three gates") {
  CircuitIR c = parse_circuit(kGhz);
  REQUIRE(c.num_wires == 3);
  REQUIRE(c.gates.size() == 3);
  CHECK(c.gates[0] == Gate::single(GateKind::H, 0, 0));
  CHECK(c.gates[1] == Gate::two(GateKind::CNOT, 0, 1, 1));
  CHECK(c.gates[2] == Gate::two(GateKind::CNOT, 1, 2, 2));
  CHECK(c.initial_states == std::vector<InitState>(3, InitState::Zero));
}

TEST_CASE("empty program parses to one zero wire") {
  CircuitIR c = parse_circuit("qubits 1");
  CHECK(c.num_wires == 1);
  CHECK(c.gates.empty());
  CHECK(c.initial_states[0] == InitState::Zero);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_circuit("qubits 2\nt 5\n"), ParseError);
  try {
    parse_circuit("qubits 2\nt 5\n");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("out of range") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_circuit("qubits 2\nfoo 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("h 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\ncnot 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nmeasure 0\nh 0\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nh 0\ninit 0 plus\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("qubits 0\n"), ParseError);
}

TEST_CASE("comments, case and init lines") {
  CircuitIR c = parse_circuit("# GHZ-ish\nQUBITS 2\ninit 1 PLUS\nH 0  # comment\nCNOT 0 1\n");
  CHECK(c.num_wires == 2);
  CHECK(c.initial_states[1] == InitState::Plus);
  CHECK(c.gates.size() == 2);
}

TEST_CASE("terminal measurement accepted, same-wire reuse rejected") {
  CircuitIR c = parse_circuit("qubits 2\nh 0\nmeasure 0\nh 1\nmeasure 1\n");
  CHECK(c.gates.size() == 4);
  CHECK(c.gates[1].kind == GateKind::MeasureZ);
}

TEST_CASE("T counting matches the worked decompositions") {
  CHECK(count_t_gates(parse_circuit(kToffoli)) == 7);
  CHECK(count_t_gates(parse_circuit(kGhz)) == 0);
  CHECK(count_t_gates(parse_circuit(kControlledVdg)) == 3);
}

TEST_CASE("clifford prefix detection") {
  CHECK(validate_clifford_prefix(parse_circuit(kGhz)));
  CHECK_FALSE(validate_clifford_prefix(parse_circuit(kToffoli)));
  CHECK(validate_clifford_prefix(parse_circuit("qubits 1")));
}

TEST_CASE("round trip: parse(print(c)) == c") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    CircuitIR c = testutil::random_clifford_t_circuit(1 + static_cast<int>(rng() % 5), 20, 3, rng);
    CircuitIR back = parse_circuit(print_circuit(c));
    CHECK(back == c);
  }
  CircuitIR measured = parse_circuit("qubits 2\ninit 1 plus\nh 0\nmeasure 0\nmeasure 1\n");
  CHECK(parse_circuit(print_circuit(measured)) == measured);
}

TEST_CASE("gate ids are a permutation in program order") {
  std::mt19937_64 rng(11);
  CircuitIR c = testutil::random_clifford_t_circuit(4, 30, 4, rng);
  for (std::size_t i = 0; i < c.gates.size(); ++i) CHECK(c.gates[i].id == static_cast<int>(i));
}

TEST_CASE("clifford padding never changes the T count") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    CircuitIR c = testutil::random_clifford_t_circuit(3, 10, 3, rng);
    int before = count_t_gates(c);
    CircuitIR padded = c;
    padded.gates.insert(padded.gates.begin(), testutil::random_clifford_gate(3, 0, rng));
    padded.gates.push_back(testutil::random_clifford_gate(3, 0, rng));
    for (std::size_t i = 0; i < padded.gates.size(); ++i) padded.gates[i].id = static_cast<int>(i);
    CHECK(count_t_gates(padded) == before);
  }
}
