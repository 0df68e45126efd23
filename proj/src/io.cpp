// Copyright 2026 The multicover Authors
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

#include "multicover/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace multicover {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

int require_int(const json& j, const std::string& field) {
  if (!j.contains(field)) throw std::invalid_argument("missing field \"" + field + "\"");
  const json& v = j.at(field);
  if (!v.is_number_integer()) {
    throw std::invalid_argument("field \"" + field + "\" must be an integer");
  }
  return v.get<int>();
}

const json& require_array(const json& j, const std::string& field) {
  if (!j.contains(field)) throw std::invalid_argument("missing field \"" + field + "\"");
  const json& v = j.at(field);
  if (!v.is_array()) throw std::invalid_argument("field \"" + field + "\" must be an array");
  return v;
}

// Group indices can exceed 2^63 for schedule-sized q^(f-1); fall back to a
// decimal string when they do.
json mpz_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

}  // namespace

Hypergraph parse_hypergraph(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw std::invalid_argument("hypergraph must be a JSON object");
  int n = require_int(j, "n");
  const json& edges_json = require_array(j, "edges");
  std::vector<std::vector<int>> edges;
  edges.reserve(edges_json.size());
  for (std::size_t i = 0; i < edges_json.size(); ++i) {
    const json& e = edges_json[i];
    if (!e.is_array()) {
      throw std::invalid_argument("edges[" + std::to_string(i) + "] must be an array");
    }
    std::vector<int> edge;
    edge.reserve(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k].is_number_integer()) {
        throw std::invalid_argument("edges[" + std::to_string(i) + "][" + std::to_string(k) +
                                    "] must be an integer");
      }
      edge.push_back(e[k].get<int>());
    }
    edges.push_back(std::move(edge));
  }
  return Hypergraph(n, std::move(edges));
}

std::string serialize_hypergraph(const Hypergraph& hg) {
  json j;
  j["n"] = hg.vertex_count();
  json edges = json::array();
  for (const auto& e : hg.edges()) edges.push_back(e);
  j["edges"] = std::move(edges);
  return j.dump();
}

Multiset parse_multiset(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw std::invalid_argument("multiset must be a JSON object");
  const json& picks = require_array(j, "picks");
  Multiset ms;
  for (std::size_t i = 0; i < picks.size(); ++i) {
    const json& p = picks[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer()) {
      throw std::invalid_argument("picks[" + std::to_string(i) +
                                  "] must be a pair [vertex, multiplicity]");
    }
    int mult = p[1].get<int>();
    if (mult <= 0) {
      throw std::invalid_argument("picks[" + std::to_string(i) +
                                  "]: multiplicity must be >= 1");
    }
    ms.add(p[0].get<int>(), mult);
  }
  return ms;
}

std::string serialize_multiset(const Multiset& ms) {
  json picks = json::array();
  for (const auto& [v, c] : ms.counts()) picks.push_back(json::array({v, c}));
  json j;
  j["picks"] = std::move(picks);
  return j.dump();
}

std::string serialize_solution(const GreedyResult& result, std::int64_t dense_limit) {
  const GreedyTrace& tr = result.trace;
  json j;
  j["picks"] = tr.picks;
  json multiset = json::array();
  for (const auto& [v, c] : result.cover.counts()) multiset.push_back(json::array({v, c}));
  j["multiset"] = std::move(multiset);
  j["size"] = static_cast<std::int64_t>(tr.picks.size());
  json groups = json::array();
  if (tr.group_count <= dense_limit) {
    mpz_class idx = 1;
    for (const auto& [z, t] : tr.dense_groups(dense_limit)) {
      groups.push_back(json::array({mpz_to_json(idx), mpz_to_json(z), t}));
      ++idx;
    }
  } else {
    for (const TraceGroup& g : tr.groups) {
      groups.push_back(json::array({mpz_to_json(g.index), mpz_to_json(g.z), g.t}));
    }
  }
  j["groups"] = std::move(groups);
  j["lambda"] = tr.lambda.str();
  j["f"] = tr.fold;
  return j.dump();
}

std::string serialize_lp(const FractionalSolution& sol) {
  json j;
  json weights = json::array();
  if (sol.exact) {
    j["objective"] = sol.objective.get_str();
    for (const mpq_class& w : sol.weights) weights.push_back(w.get_str());
  } else {
    j["objective"] = sol.objective_f;
    for (double w : sol.weights_f) weights.push_back(w);
  }
  j["weights"] = std::move(weights);
  return j.dump();
}

std::string serialize_exact(const ExactResult& result) {
  json j;
  j["tau_f"] = result.tau_f;
  json witness = json::array();
  for (const auto& [v, c] : result.witness.counts()) witness.push_back(json::array({v, c}));
  j["witness"] = std::move(witness);
  j["nodes"] = result.nodes;
  return j.dump();
}

std::string serialize_bound_report(const BoundReport& report) {
  json j;
  j["tau_star"] = report.tau_star;
  j["delta"] = report.delta;
  j["f"] = report.fold;
  j["lambda"] = report.lambda;
  j["bound_value"] = report.bound_value;
  j["greedy_size"] = report.greedy_size;
  j["satisfied"] = report.satisfied;
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

}  // namespace multicover
