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

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphc/circuit.hpp"
#include "graphc/graph_state.hpp"
#include "graphc/tableau.hpp"

namespace graphc {

using cplx = std::complex<double>;
/// Row-major 2x2 single-qubit matrix.
using Mat2 = std::array<cplx, 4>;

inline constexpr int kDefaultQubitCap = 14;

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Brute-force statevector used as the verification oracle. Wire 0 is the
/// most significant bit of the amplitude index, so ket strings read in
/// wire order. Gate kernels parallelize over amplitudes with OpenMP; the
/// serial counterparts live in dense_reference.hpp.
class DenseState {
public:
  DenseState(int n, int cap = kDefaultQubitCap);

  static DenseState from_initial_states(const std::vector<InitState>& init,
                                        int cap = kDefaultQubitCap);
  /// |+>^n followed by CZ on every edge.
  static DenseState from_graph(const GraphState& g, int cap = kDefaultQubitCap);
  static DenseState from_amplitudes(int n, std::vector<cplx> amps, int cap = kDefaultQubitCap);

  int num_qubits() const { return n_; }
  bool valid() const { return valid_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  cplx amplitude(std::size_t index) const { return amps_[index]; }

  void apply_single(int wire, const Mat2& m);
  void apply_controlled_single(int ctrl, int tgt, const Mat2& m);

  void h(int q);
  void s(int q);
  void sdg(int q);
  void t(int q);
  void tdg(int q);
  void x(int q);
  void y(int q);
  void z(int q);
  void cnot(int ctrl, int tgt);
  void cz(int a, int b);
  void ccx(int c1, int c2, int tgt);

  void apply_gate(const Gate& g);
  void apply_pauli(const PauliString& p);
  void apply_local_correction(const LocalCorrection& c);

  double norm() const;
  void normalize();

  /// Project wire onto the eigenvector of sign*A(theta) with eigenvalue
  /// (-1)^outcome and trace the wire out (the state shrinks by one qubit).
  /// Returns the branch probability; on a zero-probability branch the
  /// state is flagged invalid.
  double project_rotated(int wire, double theta, int sign, bool outcome);

  /// Reorder wires so that wire i of the result is old wire perm[i].
  void permute_wires(const std::vector<int>& perm);

private:
  int n_;
  bool valid_ = true;
  std::vector<cplx> amps_;
};

/// cos(theta) X - sin(theta) Y; A(pi/4) measures a teleported T.
Mat2 rotated_x_observable(double theta);

/// Eigenvector of A(theta) with eigenvalue (-1)^outcome.
std::array<cplx, 2> rotated_eigenvector(double theta, bool outcome);

double overlap_magnitude(const DenseState& a, const DenseState& b);
bool equal_up_to_global_phase(const DenseState& a, const DenseState& b, double tol = 1e-9);

/// Exact state of a measurement-free circuit.
DenseState run_circuit(const CircuitIR& c, int cap = kDefaultQubitCap);

std::size_t basis_index(const std::string& ket);

// Named gate matrices.
Mat2 mat_h();
Mat2 mat_s();
Mat2 mat_sdg();
Mat2 mat_t();
Mat2 mat_tdg();
Mat2 mat_x();
Mat2 mat_y();
Mat2 mat_z();
/// The controlled-V^dag target block: one of the square roots of X.
Mat2 mat_vdg();

}  // namespace graphc
