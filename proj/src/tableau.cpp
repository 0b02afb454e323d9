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

#include "graphc/tableau.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace graphc {

std::string PauliString::to_string() const {
  std::string out;
  out.reserve(x.size() + 1);
  out.push_back(negative ? '-' : '+');
  for (std::size_t q = 0; q < x.size(); ++q) {
    int code = (x.get(q) ? 1 : 0) | (z.get(q) ? 2 : 0);
    out.push_back("IXZY"[code]);
  }
  return out;
}

int pauli_product_phase_exponent(bool x1, bool z1, bool x2, bool z2) {
  if (!x1 && !z1) return 0;
  if (x1 && z1) return static_cast<int>(z2) - static_cast<int>(x2);     // Y·P
  if (x1) return static_cast<int>(z2) * (2 * static_cast<int>(x2) - 1); // X·P
  return static_cast<int>(x2) * (1 - 2 * static_cast<int>(z2));         // Z·P
}

StabilizerTableau::StabilizerTableau(const std::vector<InitState>& init)
    : n_(static_cast<int>(init.size())) {
  if (init.empty()) throw std::invalid_argument("stabilizer tableau needs at least one wire");
  x_.assign(n_, BitVec(n_));
  z_.assign(n_, BitVec(n_));
  neg_.assign(n_, false);
  for (int i = 0; i < n_; ++i) {
    if (init[i] == InitState::Zero)
      z_[i].set(i, true);
    else
      x_[i].set(i, true);
  }
}

StabilizerTableau StabilizerTableau::from_rows(const std::vector<PauliString>& rows) {
  if (rows.empty()) throw std::invalid_argument("stabilizer tableau needs at least one row");
  StabilizerTableau t(std::vector<InitState>(rows.size(), InitState::Zero));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].x.size() != rows.size())
      throw std::invalid_argument("row width must equal the row count");
    t.x_[r] = rows[r].x;
    t.z_[r] = rows[r].z;
    t.neg_[r] = rows[r].negative;
  }
  return t;
}

void StabilizerTableau::h(int q) {
  for (int r = 0; r < n_; ++r) {
    bool xb = x_[r].get(q), zb = z_[r].get(q);
    if (xb && zb) neg_[r] = !neg_[r];
    x_[r].set(q, zb);
    z_[r].set(q, xb);
  }
}

void StabilizerTableau::s(int q) {
  for (int r = 0; r < n_; ++r) {
    bool xb = x_[r].get(q), zb = z_[r].get(q);
    if (xb && zb) neg_[r] = !neg_[r];
    if (xb) z_[r].flip(q);
  }
}

void StabilizerTableau::sdg(int q) {
  for (int r = 0; r < n_; ++r) {
    bool xb = x_[r].get(q), zb = z_[r].get(q);
    if (xb && !zb) neg_[r] = !neg_[r];
    if (xb) z_[r].flip(q);
  }
}

void StabilizerTableau::x(int q) {
  for (int r = 0; r < n_; ++r)
    if (z_[r].get(q)) neg_[r] = !neg_[r];
}

void StabilizerTableau::y(int q) {
  for (int r = 0; r < n_; ++r)
    if (z_[r].get(q) != x_[r].get(q)) neg_[r] = !neg_[r];
}

void StabilizerTableau::z(int q) {
  for (int r = 0; r < n_; ++r)
    if (x_[r].get(q)) neg_[r] = !neg_[r];
}

void StabilizerTableau::cnot(int ctrl, int tgt) {
  for (int r = 0; r < n_; ++r) {
    bool xa = x_[r].get(ctrl), za = z_[r].get(ctrl);
    bool xb = x_[r].get(tgt), zb = z_[r].get(tgt);
    if (xa && zb && (xb == za)) neg_[r] = !neg_[r];
    x_[r].set(tgt, xb != xa);
    z_[r].set(ctrl, za != zb);
  }
}

void StabilizerTableau::cz(int a, int b) {
  for (int r = 0; r < n_; ++r) {
    bool xa = x_[r].get(a), za = z_[r].get(a);
    bool xb = x_[r].get(b), zb = z_[r].get(b);
    if (xa && xb && (za != zb)) neg_[r] = !neg_[r];
    if (xb) z_[r].flip(a);
    if (xa) z_[r].flip(b);
  }
}

void StabilizerTableau::apply_gate(const Gate& g) {
  if (!is_clifford(g.kind))
    throw std::invalid_argument(std::string("tableau cannot apply non-Clifford gate ") +
                                gate_name(g.kind));
  switch (g.kind) {
    case GateKind::H: h(g.targets[0]); break;
    case GateKind::S: s(g.targets[0]); break;
    case GateKind::Sdg: sdg(g.targets[0]); break;
    case GateKind::X: x(g.targets[0]); break;
    case GateKind::Y: y(g.targets[0]); break;
    case GateKind::Z: z(g.targets[0]); break;
    case GateKind::CNOT: cnot(g.targets[0], g.targets[1]); break;
    case GateKind::CZ: cz(g.targets[0], g.targets[1]); break;
    default: break;
  }
}

void StabilizerTableau::rowsum(int src, int dst) {
  if (src == dst) throw std::invalid_argument("rowsum requires distinct rows");
  int exponent = 2 * (static_cast<int>(neg_[src]) + static_cast<int>(neg_[dst]));
  for (int q = 0; q < n_; ++q)
    exponent += pauli_product_phase_exponent(x_[src].get(q), z_[src].get(q), x_[dst].get(q),
                                             z_[dst].get(q));
  exponent = ((exponent % 4) + 4) % 4;
  if (exponent & 1) throw std::logic_error("rowsum of anticommuting rows");
  neg_[dst] = exponent == 2;
  x_[dst].xor_with(x_[src]);
  z_[dst].xor_with(z_[src]);
}

void StabilizerTableau::swap_rows(int i, int j) {
  std::swap(x_[i], x_[j]);
  std::swap(z_[i], z_[j]);
  std::swap(neg_[i], neg_[j]);
}

bool StabilizerTableau::row_commutes_with(int row, const BitVec& ox, const BitVec& oz) const {
  return !(x_[row].dot(oz) != z_[row].dot(ox));
}

StabilizerTableau::MeasureResult StabilizerTableau::measure_z(int q,
                                                              std::optional<bool> forced_outcome,
                                                              std::mt19937_64& rng) {
  int pivot = -1;
  for (int r = 0; r < n_; ++r)
    if (x_[r].get(q)) {
      pivot = r;
      break;
    }

  if (pivot >= 0) {
    // Random outcome: make every other anticommuting generator commute
    // with Z_q, then replace the pivot by (-1)^outcome Z_q.
    bool outcome = forced_outcome ? *forced_outcome : static_cast<bool>(rng() & 1);
    for (int r = 0; r < n_; ++r)
      if (r != pivot && x_[r].get(q)) rowsum(pivot, r);
    x_[pivot].clear();
    z_[pivot].clear();
    z_[pivot].set(q, true);
    neg_[pivot] = outcome;
    return {outcome, false};
  }

  // Deterministic: Z_q is (up to sign) a product of generators. Reduce a
  // scratch copy and accumulate the product sign of the rows that combine
  // to Z_q.
  StabilizerTableau scratch = *this;
  BitVec tx(n_), tz(n_);
  tz.set(q, true);

  PauliString acc{BitVec(n_), BitVec(n_), false};
  int used = 0;
  auto reduce_column = [&](bool xblock, int col) {
    int p = -1;
    for (int r = used; r < n_; ++r) {
      bool bit = xblock ? scratch.x_[r].get(col) : scratch.z_[r].get(col);
      if (bit) {
        p = r;
        break;
      }
    }
    if (p < 0) return;
    scratch.swap_rows(used, p);
    for (int r = 0; r < n_; ++r) {
      if (r == used) continue;
      bool bit = xblock ? scratch.x_[r].get(col) : scratch.z_[r].get(col);
      if (bit) scratch.rowsum(used, r);
    }
    bool tbit = xblock ? tx.get(col) : tz.get(col);
    if (tbit) {
      int exponent = 2 * (static_cast<int>(scratch.neg_[used]) + static_cast<int>(acc.negative));
      for (int k = 0; k < n_; ++k)
        exponent += pauli_product_phase_exponent(scratch.x_[used].get(k), scratch.z_[used].get(k),
                                                 acc.x.get(k), acc.z.get(k));
      exponent = ((exponent % 4) + 4) % 4;
      if (exponent & 1) throw std::logic_error("deterministic measurement accumulated phase i");
      acc.negative = exponent == 2;
      acc.x.xor_with(scratch.x_[used]);
      acc.z.xor_with(scratch.z_[used]);
      tx.xor_with(scratch.x_[used]);
      tz.xor_with(scratch.z_[used]);
    }
    ++used;
  };

  for (int col = 0; col < n_; ++col) reduce_column(true, col);
  for (int col = 0; col < n_; ++col) reduce_column(false, col);

  if (tx.any() || tz.any())
    throw std::logic_error("Z measurement neither random nor in the stabilizer group");
  return {acc.negative, true};
}

PauliString StabilizerTableau::row(int i) const { return {x_[i], z_[i], neg_[i]}; }

std::vector<PauliString> StabilizerTableau::extract_stabilizers() const {
  std::vector<PauliString> out;
  out.reserve(n_);
  for (int i = 0; i < n_; ++i) out.push_back(row(i));
  return out;
}

std::string StabilizerTableau::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < n_; ++i) out << row(i).to_string() << "\n";
  return out.str();
}

bool StabilizerTableau::is_valid() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (x_[i].dot(z_[j]) != z_[i].dot(x_[j])) return false;

  StabilizerTableau scratch = *this;
  scratch.canonicalize();
  for (int r = 0; r < n_; ++r)
    if (!scratch.x_[r].any() && !scratch.z_[r].any()) return false;
  return true;
}

void StabilizerTableau::canonicalize() {
  int used = 0;
  auto sweep = [&](bool xblock) {
    for (int col = 0; col < n_ && used < n_; ++col) {
      int p = -1;
      for (int r = used; r < n_; ++r) {
        bool bit = xblock ? x_[r].get(col) : z_[r].get(col);
        if (bit) {
          p = r;
          break;
        }
      }
      if (p < 0) continue;
      swap_rows(used, p);
      for (int r = 0; r < n_; ++r) {
        if (r == used) continue;
        bool bit = xblock ? x_[r].get(col) : z_[r].get(col);
        if (bit) rowsum(used, r);
      }
      ++used;
    }
  };
  sweep(true);
  sweep(false);
}

bool same_stabilizer_group(const StabilizerTableau& a, const StabilizerTableau& b) {
  if (a.num_qubits() != b.num_qubits()) return false;
  StabilizerTableau ca = a, cb = b;
  ca.canonicalize();
  cb.canonicalize();
  for (int r = 0; r < ca.num_qubits(); ++r)
    if (ca.row(r) != cb.row(r)) return false;
  return true;
}

StabilizerTableau simulate_clifford(const CircuitIR& c) {
  StabilizerTableau t(c.initial_states);
  for (const Gate& g : c.gates) t.apply_gate(g);
  return t;
}

}  // namespace graphc
