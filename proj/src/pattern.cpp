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

#include "graphc/pattern.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace graphc {

namespace {

using json = nlohmann::ordered_json;

std::string angle_name(MeasureAngle a) {
  return a == MeasureAngle::PlusPi4 ? "+pi/4" : "-pi/4";
}

json symbols_to_json(const SymbolSet& s) {
  json arr = json::array();
  for (OutcomeSymbol sym : s) arr.push_back(symbol_name(sym));
  return arr;
}

OutcomeSymbol parse_symbol(const json& j, const std::string& ptr) {
  if (!j.is_string()) throw SchemaError(ptr, "outcome symbol must be a string");
  std::string s = j.get<std::string>();
  if (s.size() < 2 || s[0] != 'm' || s.find_first_not_of("0123456789", 1) != std::string::npos)
    throw SchemaError(ptr, "outcome symbol must look like m<id>");
  return std::stoi(s.substr(1));
}

SymbolSet parse_symbols(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw SchemaError(ptr, "expected an array of outcome symbols");
  SymbolSet out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.insert(parse_symbol(j[i], ptr + "/" + std::to_string(i)));
  return out;
}

const json& require(const json& obj, const char* key, const std::string& ptr) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(ptr + "/" + key, "missing required field");
  return *it;
}

int require_int(const json& obj, const char* key, const std::string& ptr) {
  const json& v = require(obj, key, ptr);
  if (!v.is_number_integer()) throw SchemaError(ptr + "/" + key, "expected an integer");
  return v.get<int>();
}

}  // namespace

CompiledPattern assemble(const IcmCircuit& icm, const GraphExtraction& ext,
                         const TrackResult& tracked) {
  const int total = icm.clifford_prefix.num_wires;
  if (ext.graph.n != total)
    throw std::invalid_argument("assemble: graph node count does not match the ICM register");
  if (static_cast<int>(tracked.schedule.size()) != static_cast<int>(icm.teleportations.size()))
    throw std::invalid_argument("assemble: schedule length does not match the teleportation count");
  if (tracked.outputs.size() != icm.wire_map.size())
    throw std::invalid_argument("assemble: output correction count does not match logical wires");

  std::set<int> measured;
  for (const ScheduledMeasurement& m : tracked.schedule) {
    if (m.wire < 0 || m.wire >= total)
      throw std::invalid_argument("assemble: scheduled wire out of range");
    if (!measured.insert(m.wire).second)
      throw std::invalid_argument("assemble: wire scheduled twice");
    if (icm.roles[m.wire] == NodeRole::Output)
      throw std::invalid_argument("assemble: an output wire appears in the schedule");
  }
  for (const OutputCorrection& oc : tracked.outputs)
    if (icm.roles[oc.wire] != NodeRole::Output)
      throw std::invalid_argument("assemble: output correction on a non-output wire");

  CompiledPattern p;
  p.graph = ext.graph;
  p.graph.roles = icm.roles;
  p.local_corrections = ext.corrections;
  p.schedule = tracked.schedule;
  p.output_corrections = tracked.outputs;
  p.input_labels.assign(icm.clifford_prefix.initial_states.begin(),
                        icm.clifford_prefix.initial_states.begin() + icm.num_original_wires());
  p.t_count = static_cast<int>(icm.teleportations.size());
  return p;
}

std::string pattern_to_json(const CompiledPattern& p) {
  json j;
  j["version"] = kPatternVersion;
  j["num_nodes"] = p.graph.n;
  json edges = json::array();
  for (auto [a, b] : p.graph.edges()) edges.push_back(json::array({a, b}));
  j["edges"] = std::move(edges);
  json roles = json::array();
  for (NodeRole r : p.graph.roles) roles.push_back(role_name(r));
  j["roles"] = std::move(roles);
  json labels = json::array();
  for (InitState s : p.input_labels) labels.push_back(s == InitState::Zero ? "zero" : "plus");
  j["input_labels"] = std::move(labels);
  json corr = json::array();
  for (const LocalCorrection& c : p.local_corrections)
    corr.push_back(json{{"qubit", c.qubit}, {"op", local_op_name(c.op)}});
  j["local_corrections"] = std::move(corr);
  json meas = json::array();
  for (const ScheduledMeasurement& m : p.schedule) {
    meas.push_back(json{{"wire", m.wire},
                        {"symbol", symbol_name(m.symbol)},
                        {"angle", angle_name(m.angle)},
                        {"basis_flip_deps", symbols_to_json(m.basis_flip_deps)},
                        {"outcome_relabel_deps", symbols_to_json(m.outcome_relabel_deps)},
                        {"round", m.round}});
  }
  j["measurements"] = std::move(meas);
  json outs = json::array();
  for (const OutputCorrection& oc : p.output_corrections) {
    outs.push_back(json{{"wire", oc.wire},
                        {"x_deps", symbols_to_json(oc.x_deps)},
                        {"z_deps", symbols_to_json(oc.z_deps)}});
  }
  j["output_corrections"] = std::move(outs);
  j["t_count"] = p.t_count;
  return j.dump(2) + "\n";
}

CompiledPattern pattern_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("/", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("/", "pattern document must be an object");
  const json& version = require(j, "version", "");
  if (!version.is_string() || version.get<std::string>() != kPatternVersion)
    throw SchemaError("/version", std::string("expected version ") + kPatternVersion);

  int n = require_int(j, "num_nodes", "");
  if (n < 1) throw SchemaError("/num_nodes", "node count must be positive");
  CompiledPattern p;
  p.graph = GraphState(n);

  const json& edges = require(j, "edges", "");
  if (!edges.is_array()) throw SchemaError("/edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string ptr = "/edges/" + std::to_string(i);
    const json& e = edges[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw SchemaError(ptr, "edge must be a pair of node indices");
    int a = e[0].get<int>(), b = e[1].get<int>();
    if (a < 0 || a >= n || b < 0 || b >= n || a == b) throw SchemaError(ptr, "edge out of range");
    p.graph.set_edge(a, b, true);
  }

  const json& roles = require(j, "roles", "");
  if (!roles.is_array() || static_cast<int>(roles.size()) != n)
    throw SchemaError("/roles", "expected one role per node");
  for (int i = 0; i < n; ++i) {
    std::string ptr = "/roles/" + std::to_string(i);
    if (!roles[i].is_string()) throw SchemaError(ptr, "role must be a string");
    std::string r = roles[i].get<std::string>();
    if (r == "input")
      p.graph.roles[i] = NodeRole::Input;
    else if (r == "output")
      p.graph.roles[i] = NodeRole::Output;
    else if (r == "ancilla")
      p.graph.roles[i] = NodeRole::Ancilla;
    else
      throw SchemaError(ptr, "unknown role '" + r + "'");
  }

  const json& labels = require(j, "input_labels", "");
  if (!labels.is_array()) throw SchemaError("/input_labels", "expected an array");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::string ptr = "/input_labels/" + std::to_string(i);
    if (!labels[i].is_string()) throw SchemaError(ptr, "label must be a string");
    std::string s = labels[i].get<std::string>();
    if (s == "zero")
      p.input_labels.push_back(InitState::Zero);
    else if (s == "plus")
      p.input_labels.push_back(InitState::Plus);
    else
      throw SchemaError(ptr, "unknown input label '" + s + "'");
  }

  const json& corr = require(j, "local_corrections", "");
  if (!corr.is_array()) throw SchemaError("/local_corrections", "expected an array");
  for (std::size_t i = 0; i < corr.size(); ++i) {
    std::string ptr = "/local_corrections/" + std::to_string(i);
    if (!corr[i].is_object()) throw SchemaError(ptr, "correction must be an object");
    int q = require_int(corr[i], "qubit", ptr);
    if (q < 0 || q >= n) throw SchemaError(ptr + "/qubit", "qubit out of range");
    const json& opj = require(corr[i], "op", ptr);
    if (!opj.is_string()) throw SchemaError(ptr + "/op", "op must be a string");
    std::string op = opj.get<std::string>();
    LocalOp lop;
    if (op == "H")
      lop = LocalOp::H;
    else if (op == "P")
      lop = LocalOp::P;
    else if (op == "Pdag")
      lop = LocalOp::Pdag;
    else if (op == "Z")
      lop = LocalOp::Z;
    else
      throw SchemaError(ptr + "/op", "unknown correction op '" + op + "'");
    p.local_corrections.push_back({q, lop});
  }

  const json& meas = require(j, "measurements", "");
  if (!meas.is_array()) throw SchemaError("/measurements", "expected an array");
  std::set<int> scheduled;
  std::set<OutcomeSymbol> symbols_seen;
  for (std::size_t i = 0; i < meas.size(); ++i) {
    std::string ptr = "/measurements/" + std::to_string(i);
    if (!meas[i].is_object()) throw SchemaError(ptr, "measurement must be an object");
    ScheduledMeasurement m;
    m.wire = require_int(meas[i], "wire", ptr);
    if (m.wire < 0 || m.wire >= n) throw SchemaError(ptr + "/wire", "wire out of range");
    if (!scheduled.insert(m.wire).second) throw SchemaError(ptr + "/wire", "wire scheduled twice");
    if (p.graph.roles[m.wire] == NodeRole::Output)
      throw SchemaError(ptr + "/wire", "output nodes cannot be scheduled");
    m.symbol = parse_symbol(require(meas[i], "symbol", ptr), ptr + "/symbol");
    if (!symbols_seen.insert(m.symbol).second)
      throw SchemaError(ptr + "/symbol", "duplicate outcome symbol");
    const json& anglej = require(meas[i], "angle", ptr);
    if (!anglej.is_string()) throw SchemaError(ptr + "/angle", "angle must be a string");
    std::string angle = anglej.get<std::string>();
    if (angle == "+pi/4")
      m.angle = MeasureAngle::PlusPi4;
    else if (angle == "-pi/4")
      m.angle = MeasureAngle::MinusPi4;
    else
      throw SchemaError(ptr + "/angle", "angle must be +pi/4 or -pi/4");
    m.basis_flip_deps = parse_symbols(require(meas[i], "basis_flip_deps", ptr),
                                      ptr + "/basis_flip_deps");
    m.outcome_relabel_deps = parse_symbols(require(meas[i], "outcome_relabel_deps", ptr),
                                           ptr + "/outcome_relabel_deps");
    m.round = require_int(meas[i], "round", ptr);
    if (m.round < 0) throw SchemaError(ptr + "/round", "round must be non-negative");
    p.schedule.push_back(std::move(m));
  }

  const json& outs = require(j, "output_corrections", "");
  if (!outs.is_array()) throw SchemaError("/output_corrections", "expected an array");
  for (std::size_t i = 0; i < outs.size(); ++i) {
    std::string ptr = "/output_corrections/" + std::to_string(i);
    if (!outs[i].is_object()) throw SchemaError(ptr, "output correction must be an object");
    OutputCorrection oc;
    oc.wire = require_int(outs[i], "wire", ptr);
    if (oc.wire < 0 || oc.wire >= n) throw SchemaError(ptr + "/wire", "wire out of range");
    oc.x_deps = parse_symbols(require(outs[i], "x_deps", ptr), ptr + "/x_deps");
    oc.z_deps = parse_symbols(require(outs[i], "z_deps", ptr), ptr + "/z_deps");
    p.output_corrections.push_back(std::move(oc));
  }

  p.t_count = require_int(j, "t_count", "");
  if (p.t_count != static_cast<int>(p.schedule.size()))
    throw SchemaError("/t_count", "t_count must equal the number of measurements");
  return p;
}

std::string pattern_to_dot(const CompiledPattern& p) { return graph_to_dot(p.graph); }

}  // namespace graphc
