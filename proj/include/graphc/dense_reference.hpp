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

#include <complex>
#include <vector>

#include "graphc/circuit.hpp"
#include "graphc/dense_sim.hpp"

namespace graphc::reference {

// Plain serial statevector kernels. They exist to cross-check the OpenMP
// kernels in DenseState and as the baseline for bench_dense; nothing in
// the compiler pipeline calls them.

void apply_single(std::vector<cplx>& amps, int n, int wire, const Mat2& m);
void apply_cnot(std::vector<cplx>& amps, int n, int ctrl, int tgt);
void apply_cz(std::vector<cplx>& amps, int n, int a, int b);
void apply_gate(std::vector<cplx>& amps, int n, const Gate& g);

/// Serial run of a measurement-free circuit, amplitudes indexed with
/// wire 0 as the most significant bit.
std::vector<cplx> run_circuit(const CircuitIR& c);

}  // namespace graphc::reference
