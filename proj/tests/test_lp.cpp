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

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "doctest.h"
#include "multicover/generators.hpp"
#include "multicover/io.hpp"
#include "multicover/lp.hpp"

namespace mc = multicover;

TEST_CASE("single edge") {
  mc::Hypergraph hg(3, {{0, 1, 2}});
  mc::FractionalSolution t = mc::fractional_transversal(hg, mc::LpMode::kExact);
  CHECK(t.objective == 1);
  mc::FractionalSolution m = mc::fractional_matching(hg, mc::LpMode::kExact);
  CHECK(m.objective == 1);
}

TEST_CASE("triangle optimum is 3/2") {
  mc::Hypergraph tri = mc::gen_triangle();
  mc::FractionalSolution t = mc::fractional_transversal(tri, mc::LpMode::kExact);
  CHECK(t.objective == mpq_class(3, 2));
  REQUIRE(t.weights.size() == 3);
  mpq_class sum = 0;
  for (const mpq_class& w : t.weights) sum += w;
  CHECK(sum == t.objective);

  mc::FractionalSolution m = mc::fractional_matching(tri, mc::LpMode::kExact);
  CHECK(m.objective == mpq_class(3, 2));
}

TEST_CASE("Fano optimum is 7/3") {
  mc::Hypergraph fano = mc::gen_fano();
  CHECK(mc::fractional_transversal(fano, mc::LpMode::kExact).objective == mpq_class(7, 3));
  CHECK(mc::fractional_matching(fano, mc::LpMode::kExact).objective == mpq_class(7, 3));
}

TEST_CASE("exact duality gap vanishes") {
  for (std::uint64_t seed : {1, 2, 3, 4}) {
    mc::Hypergraph hg = mc::gen_random(10, 15, 1, 4, seed);
    CHECK(mc::duality_gap(hg, mc::LpMode::kExact) == 0);
  }
}

TEST_CASE("float mode tracks exact mode") {
  for (std::uint64_t seed : {5, 6, 7}) {
    mc::Hypergraph hg = mc::gen_random(18, 30, 1, 5, seed);
    double exact = mc::fractional_transversal(hg, mc::LpMode::kExact).objective_value();
    double approx = mc::fractional_transversal(hg, mc::LpMode::kFloat).objective_f;
    CHECK(std::abs(exact - approx) <= 1e-6);
    CHECK(std::abs(mc::duality_gap(hg, mc::LpMode::kFloat).get_d()) <= 1e-6);
  }
}

TEST_CASE("transversal weights cover every edge") {
  mc::Hypergraph hg = mc::gen_random(25, 60, 2, 5, 12);
  mc::FractionalSolution t = mc::fractional_transversal(hg, mc::LpMode::kExact);
  for (const auto& edge : hg.edges()) {
    mpq_class total = 0;
    for (int v : edge) total += t.weights[v];
    CHECK(total >= 1);
  }
  for (const mpq_class& w : t.weights) {
    CHECK(w >= 0);
    CHECK(w <= 1);
  }
}

TEST_CASE("matching weights respect vertex capacities") {
  mc::Hypergraph hg = mc::gen_random(25, 60, 2, 5, 13);
  mc::FractionalSolution m = mc::fractional_matching(hg, mc::LpMode::kExact);
  REQUIRE(m.weights.size() == static_cast<std::size_t>(hg.edge_count()));
  for (int v = 0; v < hg.vertex_count(); ++v) {
    mpq_class load = 0;
    for (int e : hg.incident_edges(v)) load += m.weights[e];
    CHECK(load <= 1);
  }
}

TEST_CASE("duplicate and nested edges are handled") {
  mc::Hypergraph hg(3, {{0, 1}, {0, 1}, {0}, {0, 1, 2}});
  mc::FractionalSolution t = mc::fractional_transversal(hg, mc::LpMode::kExact);
  CHECK(t.objective == 1);  // w(0) = 1 covers everything
  CHECK(mc::duality_gap(hg, mc::LpMode::kExact) == 0);
}

TEST_CASE("LP oracles reject degenerate input") {
  CHECK_THROWS_WITH_AS(mc::fractional_transversal(mc::Hypergraph(3, {}), mc::LpMode::kExact),
                       "no edges", std::invalid_argument);
  CHECK_THROWS_AS(mc::fractional_transversal(mc::Hypergraph(2, {{0}, {}}), mc::LpMode::kExact),
                  std::invalid_argument);
}

TEST_CASE("LP JSON serialization") {
  mc::Hypergraph tri = mc::gen_triangle();
  std::string exact = mc::serialize_lp(mc::fractional_transversal(tri, mc::LpMode::kExact));
  CHECK(exact.find("\"objective\":\"3/2\"") != std::string::npos);
  std::string approx = mc::serialize_lp(mc::fractional_transversal(tri, mc::LpMode::kFloat));
  CHECK(approx.find("\"objective\":1.5") != std::string::npos);
}
