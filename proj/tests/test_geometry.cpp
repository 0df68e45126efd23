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
#include <stdexcept>

#include "doctest.h"
#include "multicover/geometry.hpp"
#include "multicover/hypergraph.hpp"

namespace mc = multicover;

TEST_CASE("convex body metrics") {
  mc::ConvexBody sq = mc::ConvexBody::box(0.5, 0.5);
  CHECK(sq.area() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sq.inradius() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(sq.circumradius() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(sq.extent_x() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(sq.symmetric());

  mc::ConvexBody hex = mc::ConvexBody::regular_polygon(6, 1.0);
  CHECK(hex.area() == doctest::Approx(1.5 * std::sqrt(3.0)).epsilon(1e-9));
  CHECK(hex.symmetric());

  mc::ConvexBody tri = mc::ConvexBody::regular_polygon(3, 1.0);
  CHECK_FALSE(tri.symmetric());
}

TEST_CASE("vertex order is normalized") {
  mc::ConvexBody ccw({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  mc::ConvexBody cw({{1, 0}, {0, -1}, {-1, 0}, {0, 1}});
  CHECK(ccw.area() == doctest::Approx(cw.area()).epsilon(1e-12));
  CHECK(cw.contains({0.4, 0.4}));
}

TEST_CASE("degenerate polygons are rejected") {
  CHECK_THROWS_AS(mc::ConvexBody({{0, 0}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(mc::ConvexBody({{0, 0}, {1, 0}, {2, 0}}), std::invalid_argument);
  // Origin on the boundary, not interior.
  CHECK_THROWS_AS(mc::ConvexBody({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), std::invalid_argument);
  // Reflex vertex.
  CHECK_THROWS_AS(mc::ConvexBody({{2, -2}, {2, 2}, {0.1, 0.1}, {-2, 2}, {-2, -2}}),
                  std::invalid_argument);
}

TEST_CASE("containment") {
  mc::ConvexBody sq = mc::ConvexBody::box(1.0, 1.0);
  CHECK(sq.contains({1.0, 1.0}));
  CHECK(sq.contains({0.0, -1.0}));
  CHECK_FALSE(sq.strictly_contains({1.0, 0.0}));
  CHECK(sq.strictly_contains({0.99, 0.99}));
  CHECK_FALSE(sq.contains({1.01, 0.0}));
}

TEST_CASE("minkowski difference shrinks by 1-delta") {
  mc::ConvexBody sq = mc::ConvexBody::box(0.5, 0.5);
  mc::ConvexBody half = mc::minkowski_difference(sq, 0.5);
  CHECK(half.extent_x() == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(half.area() == doctest::Approx(0.25).epsilon(1e-12));

  mc::ConvexBody same = mc::minkowski_difference(sq, 0.0);
  CHECK(same.area() == doctest::Approx(sq.area()).epsilon(1e-12));

  CHECK_THROWS_AS(mc::minkowski_difference(sq, 1.0), std::domain_error);
  CHECK_THROWS_AS(mc::minkowski_difference(sq, -0.1), std::domain_error);
}

TEST_CASE("saturated packing covers the square, 25-point example") {
  mc::ConvexBody sq = mc::ConvexBody::box(0.5, 0.5);
  std::vector<mc::Point> packing = mc::saturated_packing(1.0, sq, 0.5, 0.5, 0.05);
  CHECK(packing.size() == 25);

  // Translates of (delta/2)K overlap iff the center difference lies in the
  // interior of delta*K, a box of half-width 0.25 here.
  for (std::size_t i = 0; i < packing.size(); ++i) {
    for (std::size_t j = i + 1; j < packing.size(); ++j) {
      double dx = std::abs(packing[i].x - packing[j].x);
      double dy = std::abs(packing[i].y - packing[j].y);
      CHECK(std::max(dx, dy) >= 0.25 - 1e-12);
    }
  }
}

TEST_CASE("window count cap from the packing volume argument") {
  mc::ConvexBody sq = mc::ConvexBody::box(0.5, 0.5);
  double delta = 0.5;
  std::vector<mc::Point> packing = mc::saturated_packing(1.0, sq, delta, 0.25, 0.05);
  mc::ConvexBody window = mc::minkowski_difference(sq, delta);
  int cap = mc::max_window_count(packing, window, 1.0, 0.1);
  CHECK(cap <= 16);  // (2/delta)^2
  CHECK(cap >= 1);
}

TEST_CASE("cover hypergraph has an edge per target and valid candidates") {
  mc::GeometricInstance inst{mc::ConvexBody::box(0.5, 0.5), 1.0, 0.5, 1};
  inst.grid_h = 0.1;
  mc::CoverHypergraph ch = mc::build_cover_hypergraph(inst);
  CHECK(ch.hypergraph.vertex_count() == static_cast<int>(ch.centers.size()));
  CHECK(ch.hypergraph.edge_count() == static_cast<int>(ch.targets.size()));
  mc::ConvexBody window = mc::minkowski_difference(inst.k, inst.delta);
  for (int e = 0; e < ch.hypergraph.edge_count(); ++e) {
    const mc::Point& u = ch.targets[e];
    CHECK_FALSE(ch.hypergraph.edge(e).empty());
    for (int c : ch.hypergraph.edge(e)) {
      CHECK(window.contains({u.x - ch.centers[c].x, u.y - ch.centers[c].y}));
    }
  }
}

TEST_CASE("f-fold cover pipeline on a small square") {
  mc::GeometricInstance inst{mc::ConvexBody::box(0.5, 0.5), 1.0, 0.5, 2};
  inst.grid_h = 0.05;
  mc::CoverResult r = mc::f_fold_cover(inst, mc::RationalLambda(2, 7));
  CHECK(r.verified);
  CHECK(r.n_f >= 2);
  CHECK(static_cast<double>(r.n_f) <= r.bound + 1e-9);
  CHECK(r.density == doctest::Approx(mc::cover_density(r.n_f, inst.k, inst.a)).epsilon(1e-12));
  // f translates of K tile at density f at best.
  CHECK(r.density >= 2.0 - 1e-9);

  std::int64_t total = 0;
  for (int m : r.multiplicities) total += m;
  CHECK(total == r.n_f);
}

TEST_CASE("doubling f never lowers the cover size") {
  mc::GeometricInstance inst{mc::ConvexBody::box(0.5, 0.5), 1.0, 0.5, 1};
  inst.grid_h = 0.05;
  mc::CoverResult one = mc::f_fold_cover(inst, mc::RationalLambda(2, 7));
  inst.fold = 3;
  mc::CoverResult three = mc::f_fold_cover(inst, mc::RationalLambda(2, 7));
  CHECK(three.n_f >= one.n_f);
}

TEST_CASE("geometric instance JSON round trip") {
  mc::GeometricInstance inst{mc::ConvexBody::box(0.5, 0.5), 4.0, 0.25, 3};
  inst.grid_h = 0.05;
  mc::GeometricInstance back = mc::parse_geometric_instance(mc::serialize_geometric_instance(inst));
  CHECK(back.a == doctest::Approx(4.0));
  CHECK(back.delta == doctest::Approx(0.25));
  CHECK(back.fold == 3);
  CHECK(back.grid_h == doctest::Approx(0.05));
  CHECK(back.k.area() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(mc::parse_geometric_instance("{\"a\":1}"), std::invalid_argument);
}

TEST_CASE("cover result JSON") {
  mc::GeometricInstance inst{mc::ConvexBody::box(0.5, 0.5), 1.0, 0.5, 1};
  inst.grid_h = 0.05;
  std::string json = mc::serialize_cover_result(mc::f_fold_cover(inst, mc::RationalLambda(2, 7)));
  CHECK(json.find("\"N_f\"") != std::string::npos);
  CHECK(json.find("\"verified\":true") != std::string::npos);
  CHECK(json.find("\"density\"") != std::string::npos);
  CHECK(json.find("\"bound\"") != std::string::npos);
  CHECK(json.find("\"centers\"") != std::string::npos);
}
