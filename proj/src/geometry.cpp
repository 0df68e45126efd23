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

#include "multicover/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "multicover/bounds.hpp"
#include "multicover/greedy.hpp"
#include "multicover/lp.hpp"

namespace multicover {

namespace {

constexpr double kGeomEps = 1e-9;

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::string point_str(const Point& p) {
  return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

// Uniform hash grid over a point set; query visits every point within the
// axis-aligned box of half-width radius around a probe.
class Buckets {
 public:
  Buckets(const std::vector<Point>& pts, double cell) : pts_(pts), cell_(cell) {
    if (pts.empty()) return;
    min_x_ = max_x_ = pts[0].x;
    min_y_ = max_y_ = pts[0].y;
    for (const Point& p : pts) {
      min_x_ = std::min(min_x_, p.x);
      max_x_ = std::max(max_x_, p.x);
      min_y_ = std::min(min_y_, p.y);
      max_y_ = std::max(max_y_, p.y);
    }
    nx_ = static_cast<int>((max_x_ - min_x_) / cell_) + 1;
    ny_ = static_cast<int>((max_y_ - min_y_) / cell_) + 1;
    bins_.assign(static_cast<std::size_t>(nx_) * ny_, {});
    for (std::size_t i = 0; i < pts.size(); ++i) {
      bins_[index(pts[i].x, pts[i].y)].push_back(static_cast<int>(i));
    }
  }

  template <typename Fn>
  void near(const Point& p, double radius, Fn&& fn) const {
    if (pts_.empty()) return;
    int x0 = clamp_x(p.x - radius), x1 = clamp_x(p.x + radius);
    int y0 = clamp_y(p.y - radius), y1 = clamp_y(p.y + radius);
    for (int iy = y0; iy <= y1; ++iy) {
      for (int ix = x0; ix <= x1; ++ix) {
        for (int id : bins_[static_cast<std::size_t>(iy) * nx_ + ix]) fn(id);
      }
    }
  }

 private:
  int clamp_x(double x) const {
    return std::clamp(static_cast<int>((x - min_x_) / cell_), 0, nx_ - 1);
  }
  int clamp_y(double y) const {
    return std::clamp(static_cast<int>((y - min_y_) / cell_), 0, ny_ - 1);
  }
  std::size_t index(double x, double y) const {
    return static_cast<std::size_t>(clamp_y(y)) * nx_ + clamp_x(x);
  }

  const std::vector<Point>& pts_;
  double cell_ = 1.0;
  double min_x_ = 0, max_x_ = 0, min_y_ = 0, max_y_ = 0;
  int nx_ = 0, ny_ = 0;
  std::vector<std::vector<int>> bins_;
};

// Endpoint-inclusive sample coordinates from -half to half.
std::vector<double> axis_samples(double half, double pitch) {
  std::vector<double> out;
  double span = 2.0 * half;
  if (span <= kGeomEps) {
    out.push_back(0.0);
    return out;
  }
  int steps = static_cast<int>(std::ceil(span / pitch - kGeomEps));
  out.reserve(steps + 1);
  for (int i = 0; i <= steps; ++i) out.push_back(-half + span * i / steps);
  return out;
}

}  // namespace

ConvexBody::ConvexBody(std::vector<Point> vertices) : verts_(std::move(vertices)) {
  if (verts_.size() < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  double twice_area = 0.0;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    const Point& p = verts_[i];
    const Point& q = verts_[(i + 1) % verts_.size()];
    twice_area += p.x * q.y - q.x * p.y;
  }
  if (std::abs(twice_area) < kGeomEps) throw std::invalid_argument("degenerate polygon");
  if (twice_area < 0) {
    std::reverse(verts_.begin(), verts_.end());
    twice_area = -twice_area;
  }
  area_ = 0.5 * twice_area;
  const std::size_t n = verts_.size();
  inradius_ = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = verts_[i];
    const Point& q = verts_[(i + 1) % n];
    const Point& r = verts_[(i + 2) % n];
    if (cross(p, q, r) <= kGeomEps) {
      throw std::invalid_argument("polygon is not strictly convex");
    }
    double edge_len = std::hypot(q.x - p.x, q.y - p.y);
    double origin_side = cross(p, q, Point{0.0, 0.0});
    if (origin_side <= kGeomEps) {
      throw std::invalid_argument("origin must lie in the polygon interior");
    }
    inradius_ = std::min(inradius_, origin_side / edge_len);
    circumradius_ = std::max(circumradius_, std::hypot(p.x, p.y));
    extent_x_ = std::max(extent_x_, std::abs(p.x));
    extent_y_ = std::max(extent_y_, std::abs(p.y));
  }
  symmetric_ = true;
  for (const Point& p : verts_) {
    bool mirrored = false;
    for (const Point& q : verts_) {
      if (std::abs(p.x + q.x) < kGeomEps && std::abs(p.y + q.y) < kGeomEps) {
        mirrored = true;
        break;
      }
    }
    if (!mirrored) {
      symmetric_ = false;
      break;
    }
  }
}

ConvexBody ConvexBody::box(double half_width, double half_height) {
  if (half_width <= 0 || half_height <= 0) {
    throw std::invalid_argument("box half-extents must be positive");
  }
  return ConvexBody({{half_width, -half_height},
                     {half_width, half_height},
                     {-half_width, half_height},
                     {-half_width, -half_height}});
}

ConvexBody ConvexBody::regular_polygon(int sides, double circumradius) {
  if (sides < 3 || circumradius <= 0) {
    throw std::invalid_argument("need at least 3 sides and a positive radius");
  }
  std::vector<Point> verts(sides);
  for (int i = 0; i < sides; ++i) {
    double angle = 2.0 * M_PI * i / sides;
    verts[i] = {circumradius * std::cos(angle), circumradius * std::sin(angle)};
  }
  return ConvexBody(std::move(verts));
}

bool ConvexBody::contains(const Point& p) const {
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (cross(verts_[i], verts_[(i + 1) % verts_.size()], p) < -kGeomEps) return false;
  }
  return true;
}

bool ConvexBody::strictly_contains(const Point& p) const {
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (cross(verts_[i], verts_[(i + 1) % verts_.size()], p) <= kGeomEps) return false;
  }
  return true;
}

ConvexBody ConvexBody::scaled(double factor) const {
  if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<Point> verts = verts_;
  for (Point& p : verts) {
    p.x *= factor;
    p.y *= factor;
  }
  return ConvexBody(std::move(verts));
}

ConvexBody minkowski_difference(const ConvexBody& k, double delta) {
  if (delta < 0.0 || delta >= 1.0) {
    throw std::domain_error("delta must lie in [0,1)");
  }
  if (delta == 0.0) return k;
  return k.scaled(1.0 - delta);
}

double GeometricInstance::resolved_grid_h() const {
  return grid_h > 0 ? grid_h : delta * k.inradius() / 4.0;
}

double GeometricInstance::resolved_pitch() const {
  return pitch > 0 ? pitch : delta * k.inradius();
}

std::vector<Point> saturated_packing(double a, const ConvexBody& k, double delta,
                                     double pitch, double grid_h) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::domain_error("delta must lie in (0,1)");
  if (!k.symmetric()) {
    throw std::invalid_argument("packing construction requires K = -K");
  }
  if (pitch <= 0 || grid_h <= 0) throw std::invalid_argument("pitches must be positive");
  const double bx = a - 0.5 * delta * k.extent_x();
  const double by = a - 0.5 * delta * k.extent_y();
  if (bx <= 0 || by <= 0) {
    throw std::invalid_argument("cube too small for the packing body");
  }
  // Translates of (delta/2)K centered at u, v have disjoint interiors exactly
  // when u - v lies outside the interior of delta*K (K symmetric).
  const ConvexBody overlap_body = k.scaled(delta);
  const double overlap_radius = overlap_body.circumradius();

  std::vector<Point> kept;
  const std::vector<double> xs = axis_samples(bx, pitch);
  const std::vector<double> ys = axis_samples(by, pitch);
  for (double y : ys) {
    for (double x : xs) {
      Point c{x, y};
      bool hit = false;
      for (const Point& u : kept) {
        if (std::abs(c.x - u.x) > overlap_radius || std::abs(c.y - u.y) > overlap_radius) {
          continue;
        }
        if (overlap_body.strictly_contains({c.x - u.x, c.y - u.y})) {
          hit = true;
          break;
        }
      }
      if (!hit) kept.push_back(c);
    }
  }

  // The consequence the pipeline actually needs: Lambda + delta*K covers C.
  const ConvexBody reach = k.scaled(delta);
  const double reach_radius = reach.circumradius();
  Buckets cover_index(kept, std::max(reach_radius, pitch));
  const std::vector<double> sx = axis_samples(a, grid_h);
  for (double y : sx) {
    for (double x : sx) {
      bool covered = false;
      cover_index.near({x, y}, reach_radius, [&](int id) {
        if (!covered && reach.contains({x - kept[id].x, y - kept[id].y})) covered = true;
      });
      if (!covered) {
        throw std::runtime_error("packing leaves " + point_str({x, y}) +
                                 " uncovered (grid too coarse or packing not maximal)");
      }
    }
  }
  return kept;
}

CoverHypergraph build_cover_hypergraph(const GeometricInstance& inst) {
  std::vector<Point> lambda_pts = saturated_packing(
      inst.a, inst.k, inst.delta, inst.resolved_pitch(), inst.resolved_grid_h());
  const ConvexBody window = minkowski_difference(inst.k, inst.delta);
  const double radius = window.circumradius();
  Buckets index(lambda_pts, std::max(radius, inst.resolved_pitch()));

  std::vector<std::vector<int>> edges(lambda_pts.size());
  for (std::size_t j = 0; j < lambda_pts.size(); ++j) {
    const Point& u = lambda_pts[j];
    index.near(u, radius, [&](int c) {
      if (window.contains({u.x - lambda_pts[c].x, u.y - lambda_pts[c].y})) {
        edges[j].push_back(c);
      }
    });
    if (edges[j].empty()) {
      throw std::runtime_error("candidate set too sparse: no center covers " +
                               point_str(u));
    }
    std::sort(edges[j].begin(), edges[j].end());
  }
  return CoverHypergraph{
      Hypergraph(static_cast<int>(lambda_pts.size()), std::move(edges)),
      lambda_pts, lambda_pts};
}

CoverResult f_fold_cover(const GeometricInstance& inst, const RationalLambda& lambda) {
  if (inst.fold < 1) throw std::invalid_argument("fold must be positive");
  CoverHypergraph ch = build_cover_hypergraph(inst);
  const int delta_deg = max_degree(ch.hypergraph);
  GreedyResult run = greedy_solve(ch.hypergraph, inst.fold, lambda);

  CoverResult result;
  for (const auto& [v, c] : run.cover.counts()) {
    result.centers.push_back(ch.centers[v]);
    result.multiplicities.push_back(c);
  }
  result.n_f = run.cover.size();
  result.density = cover_density(result.n_f, inst.k, inst.a);

  // Certify the cover at sample resolution.
  const double radius = inst.k.circumradius();
  Buckets index(result.centers, std::max(radius, inst.resolved_pitch()));
  const std::vector<double> samples = axis_samples(inst.a, inst.resolved_grid_h());
  for (double y : samples) {
    for (double x : samples) {
      std::int64_t hits = 0;
      index.near({x, y}, radius, [&](int c) {
        if (inst.k.contains({x - result.centers[c].x, y - result.centers[c].y})) {
          hits += result.multiplicities[c];
        }
      });
      if (hits < inst.fold) {
        throw std::runtime_error("point " + point_str({x, y}) + " is covered " +
                                 std::to_string(hits) + " < " +
                                 std::to_string(inst.fold) + " times");
      }
    }
  }
  result.verified = true;

  double tau_source;
  if (ch.hypergraph.vertex_count() + ch.hypergraph.edge_count() <= 400) {
    tau_source = fractional_transversal(ch.hypergraph, LpMode::kFloat).objective_f;
  } else {
    const double vol_c = 4.0 * inst.a * inst.a;
    tau_source = (1.0 + inst.epsilon) * vol_c /
                 (std::pow(1.0 - inst.delta, 2) * inst.k.area());
  }
  result.bound = theorem1_bound(tau_source, delta_deg, inst.fold, lambda.value());
  if (result.n_f > std::ceil(result.bound)) {
    throw std::logic_error("cover size " + std::to_string(result.n_f) +
                           " exceeds the bound " + std::to_string(result.bound));
  }
  return result;
}

double cover_density(std::int64_t n_f, const ConvexBody& k, double a) {
  if (a <= 0) throw std::invalid_argument("cube half-width must be positive");
  return static_cast<double>(n_f) * k.area() / (4.0 * a * a);
}

int max_window_count(const std::vector<Point>& points, const ConvexBody& body,
                     double a, double grid_h) {
  if (points.empty()) return 0;
  const double radius = body.circumradius();
  Buckets index(points, std::max(radius, grid_h));
  const std::vector<double> samples = axis_samples(a, grid_h);
  int best = 0;
  for (double y : samples) {
    for (double x : samples) {
      int count = 0;
      index.near({x, y}, radius, [&](int c) {
        if (body.contains({points[c].x - x, points[c].y - y})) ++count;
      });
      best = std::max(best, count);
    }
  }
  return best;
}

GeometricInstance parse_geometric_instance(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("instance must be a JSON object");
  if (!j.contains("K") || !j.at("K").is_array()) {
    throw std::invalid_argument("missing polygon field \"K\"");
  }
  std::vector<Point> verts;
  for (std::size_t i = 0; i < j.at("K").size(); ++i) {
    const auto& v = j.at("K")[i];
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw std::invalid_argument("K[" + std::to_string(i) + "] must be [x, y]");
    }
    verts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  auto need_number = [&](const char* field) {
    if (!j.contains(field) || !j.at(field).is_number()) {
      throw std::invalid_argument(std::string("missing numeric field \"") + field + "\"");
    }
    return j.at(field).get<double>();
  };
  GeometricInstance inst{ConvexBody(std::move(verts)),
                         need_number("a"),
                         need_number("delta"),
                         0,
                         0.1,
                         0.0,
                         0.0};
  if (!j.contains("f") || !j.at("f").is_number_integer()) {
    throw std::invalid_argument("missing integer field \"f\"");
  }
  inst.fold = j.at("f").get<int>();
  if (j.contains("grid_h")) inst.grid_h = j.at("grid_h").get<double>();
  if (j.contains("epsilon")) inst.epsilon = j.at("epsilon").get<double>();
  if (j.contains("pitch")) inst.pitch = j.at("pitch").get<double>();
  return inst;
}

std::string serialize_geometric_instance(const GeometricInstance& inst) {
  nlohmann::json j;
  nlohmann::json verts = nlohmann::json::array();
  for (const Point& p : inst.k.vertices()) {
    verts.push_back(nlohmann::json::array({p.x, p.y}));
  }
  j["K"] = std::move(verts);
  j["a"] = inst.a;
  j["delta"] = inst.delta;
  j["f"] = inst.fold;
  j["grid_h"] = inst.resolved_grid_h();
  return j.dump();
}

std::string serialize_cover_result(const CoverResult& result) {
  nlohmann::json centers = nlohmann::json::array();
  for (std::size_t i = 0; i < result.centers.size(); ++i) {
    centers.push_back(nlohmann::json::array(
        {result.centers[i].x, result.centers[i].y, result.multiplicities[i]}));
  }
  nlohmann::json j;
  j["centers"] = std::move(centers);
  j["N_f"] = result.n_f;
  j["density"] = result.density;
  j["verified"] = result.verified;
  j["bound"] = result.bound;
  return j.dump();
}

}  // namespace multicover
