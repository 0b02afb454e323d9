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

#include "graphc/dense_sim.hpp"
#include "graphc/tableau.hpp"
#include "test_util.hpp"

using namespace graphc;

namespace {

std::vector<std::string> rows_of(const StabilizerTableau& t) {
  std::vector<std::string> out;
  for (const PauliString& p : t.extract_stabilizers()) out.push_back(p.to_string());
  return out;
}

StabilizerTableau ghz_tableau() {
  StabilizerTableau t(std::vector<InitState>(3, InitState::Zero));
  t.h(0);
  t.cnot(0, 1);
  t.cnot(1, 2);
  return t;
}

}  // namespace

TEST_CASE("initial states stabilized by Z or X") {
  StabilizerTableau zeros(std::vector<InitState>(3, InitState::Zero));
  CHECK(rows_of(zeros) == std::vector<std::string>{"+ZII", "+IZI", "+IIZ"});

  StabilizerTableau mixed(
      {InitState::Plus, InitState::Zero, InitState::Zero, InitState::Zero, InitState::Zero});
  CHECK(rows_of(mixed)[0] == "+XIIII");
  CHECK(rows_of(mixed)[1] == "+IZIII");

  StabilizerTableau plus({InitState::Plus});
  CHECK(rows_of(plus) == std::vector<std::string>{"+X"});

  CHECK_THROWS_AS(StabilizerTableau(std::vector<InitState>{}), std::invalid_argument);
}

TEST_CASE("GHZ circuit transforms the canonical tableau") {
  StabilizerTableau t = ghz_tableau();
  CHECK(rows_of(t) == std::vector<std::string>{"+XXX", "+ZZI", "+IZZ"});
}

TEST_CASE("Hadamard on the middle qubit swaps the column") {
  StabilizerTableau t = ghz_tableau();
  t.h(1);
  CHECK(rows_of(t) == std::vector<std::string>{"+XZX", "+ZXI", "+IXZ"});
}

TEST_CASE("X applied twice is the identity") {
  std::mt19937_64 rng(3);
  StabilizerTableau t = simulate_clifford(testutil::random_clifford_circuit(4, 30, rng));
  StabilizerTableau before = t;
  t.x(2);
  t.x(2);
  CHECK(rows_of(t) == rows_of(before));
}

TEST_CASE("H twice is the identity on the tableau") {
  std::mt19937_64 rng(4);
  StabilizerTableau t = simulate_clifford(testutil::random_clifford_circuit(5, 40, rng));
  StabilizerTableau before = t;
  t.h(3);
  t.h(3);
  CHECK(rows_of(t) == rows_of(before));
}

TEST_CASE("rowsum on Z-only rows never accrues a phase") {
  // GHZ rows 1 and 2 are ZZI and IZZ.
  StabilizerTableau ghz = ghz_tableau();
  ghz.rowsum(1, 2);
  CHECK(rows_of(ghz)[2] == "+ZIZ");
}

TEST_CASE("rowsum after a Hadamard on the GHZ tableau") {
  StabilizerTableau t = ghz_tableau();
  t.h(1);  // {XZX, ZXI, IXZ}
  t.rowsum(1, 2);
  CHECK(rows_of(t) == std::vector<std::string>{"+XZX", "+ZXI", "+ZIZ"});
}

TEST_CASE("rowsum is an involution on the bit part") {
  std::mt19937_64 rng(5);
  StabilizerTableau t = simulate_clifford(testutil::random_clifford_circuit(5, 40, rng));
  StabilizerTableau before = t;
  t.rowsum(1, 3);
  t.rowsum(1, 3);
  CHECK(rows_of(t) == rows_of(before));
}

TEST_CASE("rowsum rejects equal indices") {
  StabilizerTableau t = ghz_tableau();
  CHECK_THROWS_AS(t.rowsum(1, 1), std::invalid_argument);
}

TEST_CASE("term-by-term rowsum phase agrees with the lookup formula") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    StabilizerTableau t = simulate_clifford(testutil::random_clifford_circuit(n, 30, rng));
    int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
    if (i == j) continue;
    bool expected = testutil::ag_rowsum_negative(t.row(i), t.row(j));
    t.rowsum(i, j);
    CHECK(t.row(j).negative == expected);
  }
}

TEST_CASE("measurement of a plus state is random but forceable") {
  StabilizerTableau t({InitState::Plus});
  std::mt19937_64 rng(0);
  auto r = t.measure_z(0, false, rng);
  CHECK(r.outcome == false);
  CHECK(r.deterministic == false);
  CHECK(rows_of(t) == std::vector<std::string>{"+Z"});
}

TEST_CASE("measurement of a zero state is deterministic") {
  StabilizerTableau t({InitState::Zero});
  std::mt19937_64 rng(0);
  auto r = t.measure_z(0, std::nullopt, rng);
  CHECK(r.outcome == false);
  CHECK(r.deterministic == true);
  CHECK(rows_of(t) == std::vector<std::string>{"+Z"});
}

TEST_CASE("deterministic measurement through a product of generators") {
  // |0>|0> after CNOT: measuring the target is deterministic 0 and needs
  // the combination of both rows when the tableau is scrambled.
  StabilizerTableau t(std::vector<InitState>(2, InitState::Zero));
  t.cnot(0, 1);
  t.rowsum(0, 1);
  std::mt19937_64 rng(0);
  auto r = t.measure_z(1, std::nullopt, rng);
  CHECK(r.deterministic);
  CHECK(r.outcome == false);

  // X|0> = |1>: outcome is 1.
  StabilizerTableau one({InitState::Zero});
  one.x(0);
  auto r1 = one.measure_z(0, std::nullopt, rng);
  CHECK(r1.deterministic);
  CHECK(r1.outcome == true);
}

TEST_CASE("GHZ collapse: forcing qubit 0 to 1 leaves |111>") {
  // Dense oracle: projector (1 - Z_0)/2 applied to (|000>+|111>)/sqrt2
  // leaves |111>.
  DenseState dense = run_circuit(parse_circuit("qubits 3\nh 0\ncnot 0 1\ncnot 1 2\n"));
  std::vector<cplx> projected(dense.amplitudes());
  for (std::size_t i = 0; i < projected.size(); ++i)
    if (!(i >> 2 & 1)) projected[i] = 0;  // keep qubit-0 = 1 half
  DenseState expect = DenseState::from_amplitudes(3, std::move(projected));
  expect.normalize();

  StabilizerTableau t = ghz_tableau();
  std::mt19937_64 rng(0);
  auto r = t.measure_z(0, true, rng);
  CHECK(r.outcome == true);
  CHECK(r.deterministic == false);

  DenseState collapsed = testutil::stabilized_state(t);
  CHECK(overlap_magnitude(collapsed, expect) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(expect.amplitude(basis_index("111"))) == doctest::Approx(1.0));

  // Follow-up measurements are now deterministic ones.
  auto r1 = t.measure_z(1, std::nullopt, rng);
  auto r2 = t.measure_z(2, std::nullopt, rng);
  CHECK((r1.deterministic && r1.outcome == true));
  CHECK((r2.deterministic && r2.outcome == true));
}

TEST_CASE("extract_stabilizers golden rows") {
  StabilizerTableau zero({InitState::Zero});
  CHECK(rows_of(zero) == std::vector<std::string>{"+Z"});
  CHECK(rows_of(ghz_tableau()) == std::vector<std::string>{"+XXX", "+ZZI", "+IZZ"});
}

TEST_CASE("debug dump is one generator per line") {
  CHECK(ghz_tableau().to_string() == "+XXX\n+ZZI\n+IZZ\n");
}

TEST_CASE("apply_gate rejects non-Clifford kinds") {
  StabilizerTableau t({InitState::Zero});
  CHECK_THROWS_AS(t.apply_gate(Gate::single(GateKind::T, 0)), std::invalid_argument);
  CHECK_THROWS_AS(t.apply_gate(Gate::single(GateKind::MeasureZ, 0)), std::invalid_argument);
}

TEST_CASE("generators stay commuting, independent and sign-valued") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    CircuitIR c = testutil::random_clifford_circuit(n, 40, rng);
    StabilizerTableau t(c.initial_states);
    for (const Gate& g : c.gates) {
      t.apply_gate(g);
      // Spot-check validity as the state evolves.
      if ((g.id & 7) == 0) CHECK(t.is_valid());
    }
    CHECK(t.is_valid());

    // Random measurements keep it valid too.
    int q = static_cast<int>(rng() % n);
    t.measure_z(q, static_cast<bool>(rng() & 1), rng);
    CHECK(t.is_valid());
  }
}

TEST_CASE("conjugation consistency against the dense oracle") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);  // up to 6 qubits
    CircuitIR c = testutil::random_clifford_circuit(n, 30, rng);
    StabilizerTableau t = simulate_clifford(c);
    DenseState via_circuit = run_circuit(c);
    DenseState via_tableau = testutil::stabilized_state(t);
    CHECK(overlap_magnitude(via_circuit, via_tableau) > 1.0 - 1e-9);
  }
}

TEST_CASE("same_stabilizer_group sees through row scrambling") {
  StabilizerTableau a = ghz_tableau();
  StabilizerTableau b = a;
  b.rowsum(0, 2);
  b.swap_rows(0, 1);
  CHECK(same_stabilizer_group(a, b));

  StabilizerTableau c = a;
  c.z(0);  // flips the X-row sign: different state
  CHECK_FALSE(same_stabilizer_group(a, c));
}
