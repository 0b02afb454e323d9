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

// Compares the OpenMP statevector kernels against the serial reference
// implementation on a layered random Clifford+T circuit.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#include "graphc/dense_reference.hpp"
#include "graphc/dense_sim.hpp"

using namespace graphc;

namespace {

CircuitIR random_circuit(int n, int depth, uint64_t seed) {
  std::mt19937_64 rng(seed);
  CircuitIR c;
  c.num_wires = n;
  c.initial_states.assign(n, InitState::Zero);
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<int> wire(0, n - 1);
  int id = 0;
  for (int i = 0; i < depth; ++i) {
    int k = kind(rng);
    if (k < 2) {
      int a = wire(rng), b = wire(rng);
      while (b == a) b = wire(rng);
      c.gates.push_back(Gate::two(k == 0 ? GateKind::CNOT : GateKind::CZ, a, b, id++));
    } else {
      static const GateKind singles[] = {GateKind::H, GateKind::S,   GateKind::Sdg, GateKind::X,
                                         GateKind::Z, GateKind::T,   GateKind::Tdg, GateKind::Y};
      c.gates.push_back(Gate::single(singles[k - 2], wire(rng), id++));
    }
  }
  return c;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 20;
  int depth = argc > 2 ? std::atoi(argv[2]) : 200;

  CircuitIR circuit = random_circuit(n, depth, 42);
  std::cout << "random circuit: " << n << " qubits, " << depth << " gates\n";

  auto t0 = std::chrono::steady_clock::now();
  std::vector<cplx> ref = reference::run_circuit(circuit);
  double serial = seconds_since(t0);
  std::cout << "serial reference: " << serial << " s\n";

  t0 = std::chrono::steady_clock::now();
  DenseState state = run_circuit(circuit, n);
  double parallel = seconds_since(t0);
  std::cout << "openmp kernels:   " << parallel << " s (speedup " << serial / parallel << "x)\n";

  double maxdiff = 0;
  for (std::size_t i = 0; i < ref.size(); ++i)
    maxdiff = std::max(maxdiff, std::abs(ref[i] - state.amplitudes()[i]));
  std::cout << "max amplitude difference: " << maxdiff << "\n";
  return maxdiff < 1e-10 ? 0 : 1;
}
