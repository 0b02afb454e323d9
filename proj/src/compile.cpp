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

#include "graphc/compile.hpp"

#include "graphc/graph_extract.hpp"

namespace graphc {

CompileResult compile_circuit(const CircuitIR& circuit, const CompileOptions& opts) {
  CompileResult result;
  result.icm = to_inverse_icm(circuit);
  StabilizerTableau prefix_state = prefix_final_tableau(result.icm);
  GraphExtraction extraction = to_graph(prefix_state);
  extraction.graph.roles = result.icm.roles;
  TrackResult tracked = track(result.icm);
  result.pattern = assemble(result.icm, extraction, tracked);

  if (opts.optimize) {
    OptimizeResult opt = opts.exhaustive ? optimize_exhaustive(result.pattern, *opts.optimize)
                                         : optimize(result.pattern, *opts.optimize, opts.budget);
    result.pattern = std::move(opt.pattern);
    result.lc_moves = std::move(opt.applied);
  }
  return result;
}

}  // namespace graphc
