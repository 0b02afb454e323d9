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

#include "graphc/dense_reference.hpp"

#include <stdexcept>

namespace graphc::reference {

void apply_single(std::vector<cplx>& amps, int n, int wire, const Mat2& m) {
  const std::size_t mask = std::size_t{1} << (n - 1 - wire);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & mask) continue;
    cplx a0 = amps[i], a1 = amps[i | mask];
    amps[i] = m[0] * a0 + m[1] * a1;
    amps[i | mask] = m[2] * a0 + m[3] * a1;
  }
}

void apply_cnot(std::vector<cplx>& amps, int n, int ctrl, int tgt) {
  const std::size_t cmask = std::size_t{1} << (n - 1 - ctrl);
  const std::size_t tmask = std::size_t{1} << (n - 1 - tgt);
  for (std::size_t i = 0; i < amps.size(); ++i)
    if ((i & cmask) && !(i & tmask)) std::swap(amps[i], amps[i | tmask]);
}

void apply_cz(std::vector<cplx>& amps, int n, int a, int b) {
  const std::size_t amask = std::size_t{1} << (n - 1 - a);
  const std::size_t bmask = std::size_t{1} << (n - 1 - b);
  for (std::size_t i = 0; i < amps.size(); ++i)
    if ((i & amask) && (i & bmask)) amps[i] = -amps[i];
}

void apply_gate(std::vector<cplx>& amps, int n, const Gate& g) {
  switch (g.kind) {
    case GateKind::H: apply_single(amps, n, g.targets[0], mat_h()); break;
    case GateKind::S: apply_single(amps, n, g.targets[0], mat_s()); break;
    case GateKind::Sdg: apply_single(amps, n, g.targets[0], mat_sdg()); break;
    case GateKind::T: apply_single(amps, n, g.targets[0], mat_t()); break;
    case GateKind::Tdg: apply_single(amps, n, g.targets[0], mat_tdg()); break;
    case GateKind::X: apply_single(amps, n, g.targets[0], mat_x()); break;
    case GateKind::Y: apply_single(amps, n, g.targets[0], mat_y()); break;
    case GateKind::Z: apply_single(amps, n, g.targets[0], mat_z()); break;
    case GateKind::CNOT: apply_cnot(amps, n, g.targets[0], g.targets[1]); break;
    case GateKind::CZ: apply_cz(amps, n, g.targets[0], g.targets[1]); break;
    case GateKind::MeasureZ:
      throw std::invalid_argument("reference simulator does not execute measurements");
  }
}

std::vector<cplx> run_circuit(const CircuitIR& c) {
  std::vector<cplx> amps(std::size_t{1} << c.num_wires, cplx(0));
  amps[0] = cplx(1);
  for (int w = 0; w < c.num_wires; ++w)
    if (c.initial_states[w] == InitState::Plus) apply_single(amps, c.num_wires, w, mat_h());
  for (const Gate& g : c.gates) apply_gate(amps, c.num_wires, g);
  return amps;
}

}  // namespace graphc::reference
