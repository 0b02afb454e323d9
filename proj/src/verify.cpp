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

#include "graphc/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace graphc {

DenseState run_pattern(const CompiledPattern& p, const OutcomeAssignment& outcomes, int cap,
                       double* weight_out) {
  DenseState state = DenseState::from_graph(p.graph, cap);
  for (const LocalCorrection& c : p.local_corrections) state.apply_local_correction(c);

  // Projection order within the schedule is irrelevant (distinct wires);
  // the prescribed assignment already fixes every feed-forward input.
  std::vector<int> live(p.graph.n);
  for (int i = 0; i < p.graph.n; ++i) live[i] = i;

  double weight = 1.0;
  for (const ScheduledMeasurement& m : p.schedule) {
    ResolvedBasis basis = resolve_basis(m, outcomes);
    bool raw = outcomes.at(m.symbol) != basis.relabel;
    auto it = std::find(live.begin(), live.end(), m.wire);
    if (it == live.end()) throw std::logic_error("scheduled wire already consumed");
    int axis = static_cast<int>(it - live.begin());
    weight *= state.project_rotated(axis, basis.angle, +1, raw);
    live.erase(it);
    if (!state.valid()) break;
  }
  if (weight_out) *weight_out = weight;
  if (!state.valid()) return state;

  if (live.size() != p.output_corrections.size())
    throw std::logic_error("non-output wires left after executing the schedule");

  for (const OutputCorrection& oc : p.output_corrections) {
    auto it = std::find(live.begin(), live.end(), oc.wire);
    if (it == live.end()) throw std::logic_error("output correction on a consumed wire");
    int axis = static_cast<int>(it - live.begin());
    if (parity_of(oc.x_deps, outcomes)) state.x(axis);
    if (parity_of(oc.z_deps, outcomes)) state.z(axis);
  }

  // Reorder the register to logical wire order.
  std::vector<int> perm;
  perm.reserve(p.output_corrections.size());
  for (const OutputCorrection& oc : p.output_corrections) {
    auto it = std::find(live.begin(), live.end(), oc.wire);
    perm.push_back(static_cast<int>(it - live.begin()));
  }
  state.permute_wires(perm);
  return state;
}

std::string VerifyReport::failure_string() const {
  if (!first_failure) return "";
  std::ostringstream out;
  bool first = true;
  for (const auto& [sym, bit] : *first_failure) {
    if (!first) out << ' ';
    out << symbol_name(sym) << '=' << (bit ? 1 : 0);
    first = false;
  }
  return out.str();
}

namespace {

VerifyReport verify_impl(const DenseState& ideal, const CompiledPattern& p,
                         const VerifyOptions& opts) {
  if (p.graph.n > opts.cap)
    throw CapExceeded("pattern with " + std::to_string(p.graph.n) +
                      " nodes exceeds the oracle cap " + std::to_string(opts.cap));

  std::vector<OutcomeSymbol> symbols;
  symbols.reserve(p.schedule.size());
  for (const ScheduledMeasurement& m : p.schedule) symbols.push_back(m.symbol);
  const int t = static_cast<int>(symbols.size());

  std::vector<uint64_t> cases;
  if (t <= opts.exhaustive_limit) {
    cases.resize(std::size_t{1} << t);
    for (std::size_t i = 0; i < cases.size(); ++i) cases[i] = i;
  } else {
    std::mt19937_64 rng(opts.seed);
    cases.resize(opts.sample_count);
    for (auto& c : cases) c = rng();
  }

  VerifyReport report;
  report.branches_checked = static_cast<int>(cases.size());
  const double expected_weight = std::ldexp(1.0, -t);

#pragma omp parallel for schedule(dynamic) if (cases.size() > 1)
  for (std::size_t i = 0; i < cases.size(); ++i) {
    OutcomeAssignment assign;
    for (int k = 0; k < t; ++k) assign[symbols[k]] = (cases[i] >> k) & 1;
    // Exceptions must not leave the parallel region; a branch that cannot
    // even execute counts as a mismatch.
    double ov = 0.0;
    bool branch_ok = false;
    try {
      double weight = 0;
      DenseState out = run_pattern(p, assign, opts.cap, &weight);
      if (out.valid()) ov = overlap_magnitude(out, ideal);
      branch_ok = out.valid() && ov >= 1.0 - opts.tolerance &&
                  std::abs(weight - expected_weight) < 1e-9;
    } catch (const std::exception&) {
    }
#pragma omp critical
    {
      report.min_overlap = std::min(report.min_overlap, ov);
      if (!branch_ok && report.ok) {
        report.ok = false;
        report.first_failure = assign;
      }
    }
  }
  return report;
}

}  // namespace

VerifyReport verify_pattern_against(const DenseState& ideal, const CompiledPattern& p,
                                    const VerifyOptions& opts) {
  return verify_impl(ideal, p, opts);
}

VerifyReport verify_pattern(const CircuitIR& circuit, const CompiledPattern& p,
                            const VerifyOptions& opts) {
  if (p.input_labels != circuit.initial_states) {
    VerifyReport report;
    report.ok = false;
    report.note = "input labels differ between the circuit and the pattern";
    return report;
  }
  CircuitIR stripped = circuit;
  std::erase_if(stripped.gates, [](const Gate& g) { return g.kind == GateKind::MeasureZ; });
  int id = 0;
  for (Gate& g : stripped.gates) g.id = id++;
  DenseState ideal = run_circuit(stripped, opts.cap);
  return verify_impl(ideal, p, opts);
}

}  // namespace graphc
