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

// Planar f-fold covering pipeline. A centrally symmetric convex polygon K
// is to cover the square C = [-a,a]^2 at least f times. A saturated packing
// of (delta/2)K gives a finite point set Lambda with Lambda + delta*K
// covering C; the hypergraph whose vertices are candidate centers and whose
// edge for u in Lambda collects the candidates c with u in c + (1-delta)K
// is then handed to the weighted greedy, and any f-fold transversal of it
// yields an f-fold cover of C by translates of K. Coverage is certified by
// direct counting on a sample grid of pitch grid_h.

#ifndef MULTICOVER_GEOMETRY_HPP_
#define MULTICOVER_GEOMETRY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "multicover/hypergraph.hpp"
#include "multicover/rational.hpp"

namespace multicover {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Convex polygon with the origin in its interior. Vertices are normalized
// to counterclockwise order; central symmetry is detected on construction.
class ConvexBody {
 public:
  explicit ConvexBody(std::vector<Point> vertices);
  static ConvexBody box(double half_width, double half_height);
  static ConvexBody regular_polygon(int sides, double circumradius);

  const std::vector<Point>& vertices() const { return verts_; }
  bool symmetric() const { return symmetric_; }
  double area() const { return area_; }
  double inradius() const { return inradius_; }
  double circumradius() const { return circumradius_; }
  double extent_x() const { return extent_x_; }
  double extent_y() const { return extent_y_; }
  bool contains(const Point& p) const;
  bool strictly_contains(const Point& p) const;
  ConvexBody scaled(double factor) const;

 private:
  std::vector<Point> verts_;
  bool symmetric_ = false;
  double area_ = 0.0;
  double inradius_ = 0.0;
  double circumradius_ = 0.0;
  double extent_x_ = 0.0;
  double extent_y_ = 0.0;
};

// K ~ delta*K = (1-delta)K for convex K; delta = 0 returns K itself.
ConvexBody minkowski_difference(const ConvexBody& k, double delta);

struct GeometricInstance {
  ConvexBody k;
  double a = 0.0;      // C = [-a, a]^2
  double delta = 0.0;  // shrink parameter in (0,1)
  int fold = 1;
  double epsilon = 0.1;  // slack in the uniform-weight tau* bound
  double grid_h = 0.0;   // verification pitch; <= 0 means delta*inradius/4
  double pitch = 0.0;    // packing grid pitch; <= 0 means delta*inradius

  double resolved_grid_h() const;
  double resolved_pitch() const;
};

// Centers of a maximal packing of (delta/2)K translates inside C, built on
// an endpoint-inclusive grid of the given pitch and verified to satisfy
// Lambda + delta*K covering C by sampling at pitch grid_h. Requires K = -K.
std::vector<Point> saturated_packing(double a, const ConvexBody& k, double delta,
                                     double pitch, double grid_h);

struct CoverHypergraph {
  Hypergraph hypergraph;
  std::vector<Point> centers;  // vertex i is centers[i]
  std::vector<Point> targets;  // edge j demands coverage of targets[j]
};

CoverHypergraph build_cover_hypergraph(const GeometricInstance& inst);

struct CoverResult {
  std::vector<Point> centers;
  std::vector<int> multiplicities;
  std::int64_t n_f = 0;
  double density = 0.0;
  bool verified = false;
  double bound = 0.0;
};

// Full pipeline: packing, cover hypergraph, greedy solve, grid-certified
// f-fold coverage check, and the N_f <= ceil(theorem1_bound(...)) assertion
// with tau* from the float LP on small instances and from the uniform bound
// (1+epsilon) vol C / ((1-delta)^2 vol K) otherwise.
CoverResult f_fold_cover(const GeometricInstance& inst, const RationalLambda& lambda);

// n_f * area(K) / area(C) for the periodic arrangement.
double cover_density(std::int64_t n_f, const ConvexBody& k, double a);

// Largest |points in (x + body)| over samples x of C at pitch grid_h.
int max_window_count(const std::vector<Point>& points, const ConvexBody& body,
                     double a, double grid_h);

GeometricInstance parse_geometric_instance(const std::string& text);
std::string serialize_geometric_instance(const GeometricInstance& inst);
std::string serialize_cover_result(const CoverResult& result);

}  // namespace multicover

#endif  // MULTICOVER_GEOMETRY_HPP_
