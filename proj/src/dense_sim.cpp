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

#include "graphc/dense_sim.hpp"

#include <cmath>
#include <numbers>

namespace graphc {

namespace {

constexpr std::size_t kParallelCutoff = std::size_t{1} << 11;

inline std::size_t insert_bit(std::size_t i, int bitpos) {
  // Spread index i over bit positions excluding bitpos.
  std::size_t low = i & ((std::size_t{1} << bitpos) - 1);
  std::size_t high = i >> bitpos;
  return (high << (bitpos + 1)) | low;
}

}  // namespace

Mat2 mat_h() {
  double r = 1.0 / std::numbers::sqrt2;
  return {cplx(r), cplx(r), cplx(r), cplx(-r)};
}
Mat2 mat_s() { return {cplx(1), cplx(0), cplx(0), cplx(0, 1)}; }
Mat2 mat_sdg() { return {cplx(1), cplx(0), cplx(0), cplx(0, -1)}; }
Mat2 mat_t() { return {cplx(1), cplx(0), cplx(0), std::polar(1.0, std::numbers::pi / 4)}; }
Mat2 mat_tdg() { return {cplx(1), cplx(0), cplx(0), std::polar(1.0, -std::numbers::pi / 4)}; }
Mat2 mat_x() { return {cplx(0), cplx(1), cplx(1), cplx(0)}; }
Mat2 mat_y() { return {cplx(0), cplx(0, -1), cplx(0, 1), cplx(0)}; }
Mat2 mat_z() { return {cplx(1), cplx(0), cplx(0), cplx(-1)}; }
Mat2 mat_vdg() {
  return {cplx(0.5, -0.5), cplx(0.5, 0.5), cplx(0.5, 0.5), cplx(0.5, -0.5)};
}

Mat2 rotated_x_observable(double theta) {
  // cos X - sin Y = [[0, e^{i theta}], [e^{-i theta}, 0]]
  return {cplx(0), std::polar(1.0, theta), std::polar(1.0, -theta), cplx(0)};
}

std::array<cplx, 2> rotated_eigenvector(double theta, bool outcome) {
  double r = 1.0 / std::numbers::sqrt2;
  cplx second = std::polar(r, -theta);
  return {cplx(r), outcome ? -second : second};
}

DenseState::DenseState(int n, int cap) : n_(n) {
  if (n < 1) throw std::invalid_argument("dense state needs at least one qubit");
  // 2^30 amplitudes is already 16 GiB; anything above the hard limit would
  // overflow the index arithmetic long before it allocates.
  if (n > cap || n > 30)
    throw CapExceeded("dense simulation of " + std::to_string(n) + " qubits exceeds cap " +
                      std::to_string(std::min(cap, 30)));
  amps_.assign(std::size_t{1} << n, cplx(0));
  amps_[0] = cplx(1);
}

DenseState DenseState::from_initial_states(const std::vector<InitState>& init, int cap) {
  DenseState s(static_cast<int>(init.size()), cap);
  for (std::size_t q = 0; q < init.size(); ++q)
    if (init[q] == InitState::Plus) s.h(static_cast<int>(q));
  return s;
}

DenseState DenseState::from_graph(const GraphState& g, int cap) {
  DenseState s(g.n, cap);
  for (int q = 0; q < g.n; ++q) s.h(q);
  for (auto [a, b] : g.edges()) s.cz(a, b);
  return s;
}

DenseState DenseState::from_amplitudes(int n, std::vector<cplx> amps, int cap) {
  if (amps.size() != (std::size_t{1} << n))
    throw std::invalid_argument("amplitude vector size must be 2^n");
  DenseState s(n, cap);
  s.amps_ = std::move(amps);
  return s;
}

void DenseState::apply_single(int wire, const Mat2& m) {
  const int bitpos = n_ - 1 - wire;
  const std::size_t mask = std::size_t{1} << bitpos;
  const std::size_t half = amps_.size() >> 1;
  cplx* a = amps_.data();
#pragma omp parallel for schedule(static) if (half >= kParallelCutoff)
  for (std::size_t i = 0; i < half; ++i) {
    std::size_t i0 = insert_bit(i, bitpos);
    std::size_t i1 = i0 | mask;
    cplx a0 = a[i0], a1 = a[i1];
    a[i0] = m[0] * a0 + m[1] * a1;
    a[i1] = m[2] * a0 + m[3] * a1;
  }
}

void DenseState::apply_controlled_single(int ctrl, int tgt, const Mat2& m) {
  const std::size_t cmask = std::size_t{1} << (n_ - 1 - ctrl);
  const std::size_t tmask = std::size_t{1} << (n_ - 1 - tgt);
  const std::size_t size = amps_.size();
  cplx* a = amps_.data();
#pragma omp parallel for schedule(static) if (size >= 2 * kParallelCutoff)
  for (std::size_t i = 0; i < size; ++i) {
    if ((i & cmask) && !(i & tmask)) {
      std::size_t j = i | tmask;
      cplx a0 = a[i], a1 = a[j];
      a[i] = m[0] * a0 + m[1] * a1;
      a[j] = m[2] * a0 + m[3] * a1;
    }
  }
}

void DenseState::h(int q) { apply_single(q, mat_h()); }
void DenseState::s(int q) { apply_single(q, mat_s()); }
void DenseState::sdg(int q) { apply_single(q, mat_sdg()); }
void DenseState::t(int q) { apply_single(q, mat_t()); }
void DenseState::tdg(int q) { apply_single(q, mat_tdg()); }
void DenseState::x(int q) { apply_single(q, mat_x()); }
void DenseState::y(int q) { apply_single(q, mat_y()); }
void DenseState::z(int q) { apply_single(q, mat_z()); }

void DenseState::cnot(int ctrl, int tgt) { apply_controlled_single(ctrl, tgt, mat_x()); }

void DenseState::cz(int a, int b) {
  const std::size_t amask = std::size_t{1} << (n_ - 1 - a);
  const std::size_t bmask = std::size_t{1} << (n_ - 1 - b);
  const std::size_t size = amps_.size();
  cplx* v = amps_.data();
#pragma omp parallel for schedule(static) if (size >= 2 * kParallelCutoff)
  for (std::size_t i = 0; i < size; ++i)
    if ((i & amask) && (i & bmask)) v[i] = -v[i];
}

void DenseState::ccx(int c1, int c2, int tgt) {
  const std::size_t m1 = std::size_t{1} << (n_ - 1 - c1);
  const std::size_t m2 = std::size_t{1} << (n_ - 1 - c2);
  const std::size_t mt = std::size_t{1} << (n_ - 1 - tgt);
  const std::size_t size = amps_.size();
  cplx* v = amps_.data();
#pragma omp parallel for schedule(static) if (size >= 2 * kParallelCutoff)
  for (std::size_t i = 0; i < size; ++i)
    if ((i & m1) && (i & m2) && !(i & mt)) std::swap(v[i], v[i | mt]);
}

void DenseState::apply_gate(const Gate& g) {
  switch (g.kind) {
    case GateKind::H: h(g.targets[0]); break;
    case GateKind::S: s(g.targets[0]); break;
    case GateKind::Sdg: sdg(g.targets[0]); break;
    case GateKind::T: t(g.targets[0]); break;
    case GateKind::Tdg: tdg(g.targets[0]); break;
    case GateKind::X: x(g.targets[0]); break;
    case GateKind::Y: y(g.targets[0]); break;
    case GateKind::Z: z(g.targets[0]); break;
    case GateKind::CNOT: cnot(g.targets[0], g.targets[1]); break;
    case GateKind::CZ: cz(g.targets[0], g.targets[1]); break;
    case GateKind::MeasureZ:
      throw std::invalid_argument("dense oracle does not execute measurement gates");
  }
}

void DenseState::apply_pauli(const PauliString& p) {
  for (int q = 0; q < n_; ++q) {
    bool xb = p.x.get(q), zb = p.z.get(q);
    if (xb && zb)
      y(q);
    else if (xb)
      x(q);
    else if (zb)
      z(q);
  }
  if (p.negative)
    for (cplx& a : amps_) a = -a;
}

void DenseState::apply_local_correction(const LocalCorrection& c) {
  switch (c.op) {
    case LocalOp::H: h(c.qubit); break;
    case LocalOp::P: s(c.qubit); break;
    case LocalOp::Pdag: sdg(c.qubit); break;
    case LocalOp::Z: z(c.qubit); break;
  }
}

double DenseState::norm() const {
  double total = 0;
  for (const cplx& a : amps_) total += std::norm(a);
  return std::sqrt(total);
}

void DenseState::normalize() {
  double nrm = norm();
  if (nrm == 0) {
    valid_ = false;
    return;
  }
  for (cplx& a : amps_) a /= nrm;
}

double DenseState::project_rotated(int wire, double theta, int sign, bool outcome) {
  if (sign < 0) outcome = !outcome;
  auto vec = rotated_eigenvector(theta, outcome);

  const int bitpos = n_ - 1 - wire;
  const std::size_t mask = std::size_t{1} << bitpos;
  const std::size_t half = amps_.size() >> 1;
  std::vector<cplx> next(half);
  const cplx c0 = std::conj(vec[0]), c1 = std::conj(vec[1]);
  const cplx* a = amps_.data();
#pragma omp parallel for schedule(static) if (half >= kParallelCutoff)
  for (std::size_t i = 0; i < half; ++i) {
    std::size_t i0 = insert_bit(i, bitpos);
    next[i] = c0 * a[i0] + c1 * a[i0 | mask];
  }

  amps_ = std::move(next);
  --n_;
  double weight = 0;
  for (const cplx& v : amps_) weight += std::norm(v);
  if (weight < 1e-24) {
    valid_ = false;
    return 0.0;
  }
  double inv = 1.0 / std::sqrt(weight);
  for (cplx& v : amps_) v *= inv;
  return weight;
}

void DenseState::permute_wires(const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != n_)
    throw std::invalid_argument("permutation size must match qubit count");
  std::vector<cplx> next(amps_.size());
  const std::size_t size = amps_.size();
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t j = 0;
    for (int w = 0; w < n_; ++w) {
      std::size_t bit = (i >> (n_ - 1 - perm[w])) & 1;
      j |= bit << (n_ - 1 - w);
    }
    next[j] = amps_[i];
  }
  amps_ = std::move(next);
}

double overlap_magnitude(const DenseState& a, const DenseState& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("overlap of states with different qubit counts");
  cplx acc(0);
  const auto& va = a.amplitudes();
  const auto& vb = b.amplitudes();
  for (std::size_t i = 0; i < va.size(); ++i) acc += std::conj(va[i]) * vb[i];
  double na = a.norm(), nb = b.norm();
  if (na == 0 || nb == 0) return 0;
  return std::abs(acc) / (na * nb);
}

bool equal_up_to_global_phase(const DenseState& a, const DenseState& b, double tol) {
  return a.valid() && b.valid() && overlap_magnitude(a, b) >= 1.0 - tol;
}

DenseState run_circuit(const CircuitIR& c, int cap) {
  for (const Gate& g : c.gates)
    if (g.kind == GateKind::MeasureZ)
      throw std::invalid_argument("run_circuit requires a measurement-free circuit");
  DenseState s = DenseState::from_initial_states(c.initial_states, cap);
  for (const Gate& g : c.gates) s.apply_gate(g);
  return s;
}

std::size_t basis_index(const std::string& ket) {
  std::size_t i = 0;
  for (char ch : ket) {
    i <<= 1;
    if (ch == '1') i |= 1;
  }
  return i;
}

}  // namespace graphc
