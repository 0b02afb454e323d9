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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "graphc/compile.hpp"
#include "graphc/verify.hpp"

namespace {

constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;
constexpr int kExitMismatch = 3;

struct CliError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kExitParse, "cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{kExitValidation, "cannot write '" + path + "'"};
  out << content;
}

graphc::CircuitIR load_circuit(const std::string& path, const std::string& input_state) {
  graphc::CircuitIR c;
  try {
    c = graphc::parse_circuit(read_file(path));
  } catch (const graphc::ParseError& e) {
    throw CliError{kExitParse, path + ": " + e.what()};
  }
  if (!input_state.empty()) {
    if (static_cast<int>(input_state.size()) != c.num_wires)
      throw CliError{kExitValidation, "--input-state needs one character per wire"};
    for (int w = 0; w < c.num_wires; ++w) {
      char ch = input_state[w];
      if (ch == '0')
        c.initial_states[w] = graphc::InitState::Zero;
      else if (ch == '+')
        c.initial_states[w] = graphc::InitState::Plus;
      else
        throw CliError{kExitValidation, "--input-state characters must be '0' or '+'"};
    }
  }
  return c;
}

int cmd_compile(const std::string& input, const std::string& out_path, const std::string& dot_path,
                const std::string& optimize, bool exhaustive, int budget,
                const std::string& input_state, const std::string& emit_icm) {
  graphc::CircuitIR circuit = load_circuit(input, input_state);

  graphc::CompileOptions opts;
  opts.budget = budget;
  opts.exhaustive = exhaustive;
  if (optimize == "edges")
    opts.optimize = graphc::Objective::EdgeCount;
  else if (optimize == "degree")
    opts.optimize = graphc::Objective::MaxDegree;
  else if (optimize != "none")
    throw CliError{kExitValidation, "--optimize must be edges, degree or none"};

  graphc::CompileResult result;
  try {
    result = graphc::compile_circuit(circuit, opts);
  } catch (const std::exception& e) {
    throw CliError{kExitValidation, e.what()};
  }

  if (!emit_icm.empty()) write_output(emit_icm, graphc::icm_to_text(result.icm));
  if (!dot_path.empty()) write_output(dot_path, graphc::pattern_to_dot(result.pattern));
  write_output(out_path, graphc::pattern_to_json(result.pattern));
  return 0;
}

int cmd_verify(const std::string& circuit_path, const std::string& pattern_path, uint64_t seed,
               int cap) {
  graphc::CircuitIR circuit = load_circuit(circuit_path, "");
  graphc::CompiledPattern pattern;
  try {
    pattern = graphc::pattern_from_json(read_file(pattern_path));
  } catch (const graphc::SchemaError& e) {
    throw CliError{kExitValidation, pattern_path + ": " + e.what()};
  }

  graphc::VerifyOptions opts;
  opts.seed = seed;
  opts.cap = cap;
  graphc::VerifyReport report;
  try {
    report = graphc::verify_pattern(circuit, pattern, opts);
  } catch (const graphc::CapExceeded& e) {
    throw CliError{kExitValidation, e.what()};
  } catch (const std::exception& e) {
    throw CliError{kExitValidation, e.what()};
  }

  if (!report.ok) {
    std::cerr << "pattern does not reproduce the circuit";
    if (!report.note.empty()) std::cerr << ": " << report.note;
    if (report.first_failure)
      std::cerr << "; failing outcome assignment: " << report.failure_string();
    std::cerr << "\n";
    return kExitMismatch;
  }
  std::cout << "verified " << report.branches_checked << " outcome branch(es), min overlap "
            << report.min_overlap << "\n";
  return 0;
}

int cmd_graph(const std::string& circuit_path, const std::string& input_state) {
  graphc::CircuitIR circuit = load_circuit(circuit_path, input_state);
  std::erase_if(circuit.gates,
                [](const graphc::Gate& g) { return g.kind == graphc::GateKind::MeasureZ; });
  int id = 0;
  for (graphc::Gate& g : circuit.gates) g.id = id++;
  if (!graphc::validate_clifford_prefix(circuit))
    throw CliError{kExitValidation, "graph conversion needs a Clifford-only circuit"};

  graphc::GraphExtraction ext;
  try {
    ext = graphc::to_graph(graphc::simulate_clifford(circuit));
  } catch (const std::exception& e) {
    throw CliError{kExitValidation, e.what()};
  }

  std::ostringstream line;
  line << "edges: ";
  auto edges = ext.graph.edges();
  if (edges.empty()) line << "none";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) line << ", ";
    line << edges[i].first << "-" << edges[i].second;
  }
  line << "; corrections: ";
  auto ops = ext.conversion_ops();
  if (ops.empty()) line << "none";
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (i) line << ' ';
    line << graphc::local_op_name(ops[i].op) << '@' << ops[i].qubit;
  }
  std::cout << line.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphc: compile Clifford+T circuits into graph states with a feed-forward "
               "measurement schedule"};
  app.require_subcommand(1);

  std::string input, out_path = "-", dot_path, optimize = "none", input_state, emit_icm;
  std::string pattern_path;
  bool exhaustive = false;
  int budget = 100;
  int cap = graphc::kDefaultQubitCap;
  uint64_t seed = 0;

  auto* compile = app.add_subcommand("compile", "compile a circuit into a pattern JSON");
  compile->add_option("input", input, "circuit file")->required();
  compile->add_option("-o,--out", out_path, "output path, - for stdout");
  compile->add_option("--dot", dot_path, "also write a DOT rendering");
  compile->add_option("--optimize", optimize, "edges|degree|none (default none)");
  compile->add_flag("--exhaustive", exhaustive, "search the whole LC orbit (n <= 10)");
  compile->add_option("--budget", budget, "LC move budget (default 100)");
  compile->add_option("--seed", seed, "RNG seed (default 0)");
  compile->add_option("--cap", cap, "dense oracle qubit cap (default 14)");
  compile->add_option("--input-state", input_state, "override init labels, e.g. +0");
  compile->add_option("--emit-icm", emit_icm, "write the ICM prefix as circuit text");

  auto* verify = app.add_subcommand("verify", "check a pattern against its circuit");
  verify->add_option("circuit", input, "circuit file")->required();
  verify->add_option("pattern", pattern_path, "pattern JSON file")->required();
  verify->add_option("--seed", seed, "RNG seed for sampled branches (default 0)");
  verify->add_option("--cap", cap, "dense oracle qubit cap (default 14)");

  auto* graph = app.add_subcommand("graph", "stabilizer-to-graph conversion of a Clifford circuit");
  graph->add_option("circuit", input, "circuit file")->required();
  graph->add_option("--input-state", input_state, "override init labels, e.g. +0");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compile->parsed())
      return cmd_compile(input, out_path, dot_path, optimize, exhaustive, budget, input_state,
                         emit_icm);
    if (verify->parsed()) return cmd_verify(input, pattern_path, seed, cap);
    if (graph->parsed()) return cmd_graph(input, input_state);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
