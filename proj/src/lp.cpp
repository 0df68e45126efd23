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

#include "multicover/lp.hpp"

#include <stdexcept>
#include <string>

#include "multicover/simplex.hpp"

namespace multicover {

namespace {

constexpr double kFloatFeasTol = 1e-7;

void check_instance(const Hypergraph& hg) {
  if (hg.edge_count() == 0) throw std::invalid_argument("no edges");
  for (int e = 0; e < hg.edge_count(); ++e) {
    if (hg.edge(e).empty()) {
      throw std::invalid_argument("empty edge " + std::to_string(e));
    }
  }
}

template <typename Real>
LpProblem<Real> transversal_problem(const Hypergraph& hg) {
  const int n = hg.vertex_count();
  const int m = hg.edge_count();
  LpProblem<Real> prob;
  prob.nvars = n;
  prob.rows.assign(m, std::vector<Real>(n, Real(0)));
  prob.rhs.assign(m, Real(0));
  for (int e = 0; e < m; ++e) {
    for (int x : hg.edge(e)) prob.rows[e][x] = Real(1);
    prob.rhs[e] = Real(static_cast<int>(hg.edge(e).size()) - 1);
  }
  prob.objective.assign(n, Real(1));
  prob.upper.assign(n, Real(1));
  prob.bounded.assign(n, true);
  return prob;
}

template <typename Real>
LpProblem<Real> matching_problem(const Hypergraph& hg) {
  const int n = hg.vertex_count();
  const int m = hg.edge_count();
  LpProblem<Real> prob;
  prob.nvars = m;
  prob.rows.assign(n, std::vector<Real>(m, Real(0)));
  prob.rhs.assign(n, Real(1));
  for (int e = 0; e < m; ++e) {
    for (int x : hg.edge(e)) prob.rows[static_cast<std::size_t>(x)][e] = Real(1);
  }
  prob.objective.assign(m, Real(1));
  prob.upper.assign(m, Real(1));
  prob.bounded.assign(m, true);
  return prob;
}

void verify_transversal_exact(const Hypergraph& hg, const std::vector<mpq_class>& w) {
  for (std::size_t x = 0; x < w.size(); ++x) {
    if (w[x] < 0 || w[x] > 1) throw std::logic_error("transversal weight out of [0,1]");
  }
  for (int e = 0; e < hg.edge_count(); ++e) {
    mpq_class s = 0;
    for (int x : hg.edge(e)) s += w[x];
    if (s < 1) throw std::logic_error("transversal constraint violated at edge " +
                                      std::to_string(e));
  }
}

void verify_transversal_float(const Hypergraph& hg, const std::vector<double>& w) {
  for (int e = 0; e < hg.edge_count(); ++e) {
    double s = 0;
    for (int x : hg.edge(e)) s += w[x];
    if (s < 1 - kFloatFeasTol) {
      throw std::runtime_error("float LP solution infeasible at edge " +
                               std::to_string(e) + "; try exact mode");
    }
  }
}

void verify_matching_exact(const Hypergraph& hg, const std::vector<mpq_class>& w) {
  for (std::size_t e = 0; e < w.size(); ++e) {
    if (w[e] < 0 || w[e] > 1) throw std::logic_error("matching weight out of [0,1]");
  }
  for (int x = 0; x < hg.vertex_count(); ++x) {
    mpq_class s = 0;
    for (int e : hg.incident_edges(x)) s += w[e];
    if (s > 1) throw std::logic_error("matching constraint violated at vertex " +
                                      std::to_string(x));
  }
}

void verify_matching_float(const Hypergraph& hg, const std::vector<double>& w) {
  for (int x = 0; x < hg.vertex_count(); ++x) {
    double s = 0;
    for (int e : hg.incident_edges(x)) s += w[e];
    if (s > 1 + kFloatFeasTol) {
      throw std::runtime_error("float LP solution infeasible at vertex " +
                               std::to_string(x) + "; try exact mode");
    }
  }
}

}  // namespace

FractionalSolution fractional_transversal(const Hypergraph& hg, LpMode mode) {
  check_instance(hg);
  const int n = hg.vertex_count();
  FractionalSolution sol;
  sol.side = WeightSide::kVertex;
  if (mode == LpMode::kExact) {
    auto lp = solve_lp(transversal_problem<mpq_class>(hg));
    sol.exact = true;
    sol.weights.resize(n);
    for (int x = 0; x < n; ++x) sol.weights[x] = 1 - lp.x[x];
    sol.objective = n - lp.objective;
    verify_transversal_exact(hg, sol.weights);
  } else {
    auto lp = solve_lp(transversal_problem<double>(hg));
    sol.exact = false;
    sol.weights_f.resize(n);
    for (int x = 0; x < n; ++x) sol.weights_f[x] = 1.0 - lp.x[x];
    sol.objective_f = n - lp.objective;
    verify_transversal_float(hg, sol.weights_f);
  }
  return sol;
}

FractionalSolution fractional_matching(const Hypergraph& hg, LpMode mode) {
  check_instance(hg);
  FractionalSolution sol;
  sol.side = WeightSide::kEdge;
  if (mode == LpMode::kExact) {
    auto lp = solve_lp(matching_problem<mpq_class>(hg));
    sol.exact = true;
    sol.weights = std::move(lp.x);
    sol.objective = std::move(lp.objective);
    verify_matching_exact(hg, sol.weights);
  } else {
    auto lp = solve_lp(matching_problem<double>(hg));
    sol.exact = false;
    sol.weights_f = std::move(lp.x);
    sol.objective_f = lp.objective;
    verify_matching_float(hg, sol.weights_f);
  }
  return sol;
}

mpq_class duality_gap(const Hypergraph& hg, LpMode mode) {
  FractionalSolution t = fractional_transversal(hg, mode);
  FractionalSolution m = fractional_matching(hg, mode);
  if (mode == LpMode::kExact) return t.objective - m.objective;
  return mpq_class(t.objective_f) - mpq_class(m.objective_f);
}

}  // namespace multicover
