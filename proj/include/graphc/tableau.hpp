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

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "graphc/bitvec.hpp"
#include "graphc/circuit.hpp"

namespace graphc {

/// Pauli operator on n qubits as X/Z bit masks and a sign. Bits (1,1)
/// denote the literal Y operator.
struct PauliString {
  BitVec x;
  BitVec z;
  bool negative = false;

  std::string to_string() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// Generator tableau of a stabilizer state: one row per generator with
/// packed X bits, Z bits and a sign. No destabilizer rows are kept;
/// deterministic measurements solve for the generator combination by
/// GF(2) elimination instead.
class StabilizerTableau {
public:
  /// State with wire i stabilized by Z_i (Zero) or X_i (Plus), all signs +.
  explicit StabilizerTableau(const std::vector<InitState>& init);

  /// Build directly from generator rows (one per qubit). No validity check
  /// is performed; see is_valid().
  static StabilizerTableau from_rows(const std::vector<PauliString>& rows);

  int num_qubits() const { return n_; }

  bool x_bit(int row, int q) const { return x_[row].get(q); }
  bool z_bit(int row, int q) const { return z_[row].get(q); }
  bool sign_bit(int row) const { return neg_[row]; }

  // Clifford conjugation updates, one call per gate.
  void h(int q);
  void s(int q);
  void sdg(int q);
  void x(int q);
  void y(int q);
  void z(int q);
  void cnot(int ctrl, int tgt);
  void cz(int a, int b);

  /// Dispatch on gate kind; throws std::invalid_argument for T/Tdg/MeasureZ.
  void apply_gate(const Gate& g);

  /// Replace row dst with the product (row src)·(row dst). The phase is
  /// accumulated term by term; throws std::logic_error if the rows
  /// anticommute (cannot happen for generators of one state).
  void rowsum(int src, int dst);

  void swap_rows(int i, int j);

  struct MeasureResult {
    bool outcome;
    bool deterministic;
  };

  /// Z measurement on qubit q. When some generator anticommutes with Z_q
  /// the outcome is random (forced_outcome wins over the RNG) and the
  /// tableau collapses; otherwise the outcome is computed and the tableau
  /// is left untouched.
  MeasureResult measure_z(int q, std::optional<bool> forced_outcome, std::mt19937_64& rng);

  PauliString row(int i) const;
  std::vector<PauliString> extract_stabilizers() const;

  /// Debug dump, one generator per line as sign then Pauli letters.
  std::string to_string() const;

  /// All generator pairs commute and the [X|Z] matrix has rank n.
  bool is_valid() const;

  /// Bring the tableau to row-reduced echelon form over the symplectic
  /// columns (X block first), phases updated alongside. The result is a
  /// canonical representative of the stabilizer group.
  void canonicalize();

private:
  bool row_commutes_with(int row, const BitVec& ox, const BitVec& oz) const;

  int n_;
  std::vector<BitVec> x_;
  std::vector<BitVec> z_;
  std::vector<bool> neg_;
};

/// Exponent of i in the single-qubit product P1·P2 (bits with Y literal).
int pauli_product_phase_exponent(bool x1, bool z1, bool x2, bool z2);

/// True iff the two tableaus generate the same stabilizer group,
/// signs included (checked via canonical forms).
bool same_stabilizer_group(const StabilizerTableau& a, const StabilizerTableau& b);

/// Run a measurement-free Clifford circuit on its declared initial states.
/// Throws std::invalid_argument if the circuit contains T/Tdg/MeasureZ.
StabilizerTableau simulate_clifford(const CircuitIR& c);

}  // namespace graphc
