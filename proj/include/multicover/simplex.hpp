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

// Dense tableau simplex for problems of the form
//
//   max c^T x   subject to   A x <= b,  0 <= x_j <= u_j,  b >= 0,
//
// with variable upper bounds handled by nonbasic-at-bound bookkeeping rather
// than extra rows. Since b >= 0 the all-slack basis is feasible and no phase
// one is needed. Instantiated with Real = mpq_class (exact, Bland's rule) or
// Real = double (Dantzig's rule with a Bland fallback on stalls).

#ifndef MULTICOVER_SIMPLEX_HPP_
#define MULTICOVER_SIMPLEX_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace multicover {

template <typename Real>
struct SimplexTraits {
  static Real eps() { return Real(0); }
  static constexpr bool kExact = true;
};

template <>
struct SimplexTraits<double> {
  static double eps() { return 1e-9; }
  static constexpr bool kExact = false;
};

template <typename Real>
struct LpProblem {
  int nvars = 0;
  std::vector<std::vector<Real>> rows;  // m x nvars constraint matrix
  std::vector<Real> rhs;                // length m, nonnegative
  std::vector<Real> objective;          // length nvars
  std::vector<Real> upper;              // length nvars; ignored when unbounded
  std::vector<bool> bounded;            // length nvars; true if x_j <= upper[j]
};

template <typename Real>
struct LpSolution {
  std::vector<Real> x;
  Real objective = Real(0);
  std::int64_t iterations = 0;
};

template <typename Real>
LpSolution<Real> solve_lp(const LpProblem<Real>& prob) {
  const Real eps = SimplexTraits<Real>::eps();
  const int m = static_cast<int>(prob.rows.size());
  const int nv = prob.nvars;
  const int ncols = nv + m;
  for (int i = 0; i < m; ++i) {
    if (prob.rhs[i] < Real(0)) throw std::invalid_argument("simplex needs b >= 0");
  }

  std::vector<std::vector<Real>> t(m, std::vector<Real>(ncols, Real(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < nv; ++j) t[i][j] = prob.rows[i][j];
    t[i][nv + i] = Real(1);
  }
  std::vector<Real> cost(ncols, Real(0));
  for (int j = 0; j < nv; ++j) cost[j] = prob.objective[j];

  std::vector<Real> xb = prob.rhs;
  std::vector<int> basis(m);
  std::vector<bool> in_basis(ncols, false);
  for (int i = 0; i < m; ++i) {
    basis[i] = nv + i;
    in_basis[nv + i] = true;
  }
  std::vector<bool> at_upper(ncols, false);
  auto has_ub = [&](int col) { return col < nv && prob.bounded[col]; };
  auto ub_of = [&](int col) -> const Real& { return prob.upper[col]; };

  const std::int64_t iter_limit = 2000 + 200LL * ncols;
  std::int64_t stall = 0;
  bool bland = SimplexTraits<Real>::kExact;
  LpSolution<Real> sol;

  for (std::int64_t iter = 0;; ++iter) {
    if (iter > iter_limit) {
      throw std::runtime_error("simplex iteration limit reached; try exact mode");
    }
    sol.iterations = iter;

    int enter = -1;
    Real best_gain = eps;
    for (int j = 0; j < ncols; ++j) {
      if (in_basis[j]) continue;
      Real gain = at_upper[j] ? -cost[j] : cost[j];
      if (gain > best_gain) {
        enter = j;
        if (bland) break;
        best_gain = gain;
      }
    }
    if (enter < 0) break;
    const int sigma = at_upper[enter] ? -1 : 1;

    // Ratio test: smallest step at which the entering variable's own span is
    // exhausted (bound flip) or some basic variable hits one of its bounds.
    bool have_limit = false;
    Real step = Real(0);
    int leave = -1;       // -1: none yet, -2: bound flip, else row index
    bool leave_hits_upper = false;
    if (has_ub(enter)) {
      step = ub_of(enter);
      leave = -2;
      have_limit = true;
    }
    for (int i = 0; i < m; ++i) {
      const Real& d = t[i][enter];
      Real rate = sigma > 0 ? d : -d;
      Real cand;
      bool hits_upper;
      if (rate > eps) {
        cand = xb[i] / rate;
        hits_upper = false;
      } else if (rate < -eps && has_ub(basis[i])) {
        cand = (ub_of(basis[i]) - xb[i]) / (-rate);
        hits_upper = true;
      } else {
        continue;
      }
      bool take = false;
      if (!have_limit || cand < step) {
        take = true;
      } else if (cand == step && leave >= 0) {
        // Tie: Bland picks the smallest leaving variable index; the float
        // path prefers the larger pivot magnitude for stability.
        if (SimplexTraits<Real>::kExact || bland) {
          take = basis[i] < basis[leave];
        } else {
          Real cur = t[leave][enter] < Real(0) ? -t[leave][enter] : t[leave][enter];
          Real alt = d < Real(0) ? -d : d;
          take = alt > cur;
        }
      }
      if (take) {
        step = cand;
        leave = i;
        leave_hits_upper = hits_upper;
        have_limit = true;
      }
    }
    if (!have_limit) throw std::runtime_error("simplex detected an unbounded LP");

    if (step == Real(0)) {
      ++stall;
      if (!SimplexTraits<Real>::kExact && stall > 2 * ncols) bland = true;
    } else {
      stall = 0;
      if (!SimplexTraits<Real>::kExact) bland = false;
    }

    if (leave == -2) {
      for (int i = 0; i < m; ++i) {
        if (t[i][enter] != Real(0)) xb[i] -= sigma * step * t[i][enter];
      }
      at_upper[enter] = !at_upper[enter];
      continue;
    }

    Real enter_value = at_upper[enter] ? ub_of(enter) - step : step;
    for (int i = 0; i < m; ++i) {
      if (i != leave && t[i][enter] != Real(0)) xb[i] -= sigma * step * t[i][enter];
    }
    const int out_col = basis[leave];
    in_basis[out_col] = false;
    at_upper[out_col] = leave_hits_upper;
    xb[leave] = enter_value;
    basis[leave] = enter;
    in_basis[enter] = true;

    const Real pivot = t[leave][enter];
    std::vector<Real>& prow = t[leave];
    for (int j = 0; j < ncols; ++j) {
      if (prow[j] != Real(0)) prow[j] /= pivot;
    }
    for (int i = 0; i < m; ++i) {
      if (i == leave) continue;
      const Real factor = t[i][enter];
      if (factor == Real(0)) continue;
      std::vector<Real>& row = t[i];
      for (int j = 0; j < ncols; ++j) {
        if (prow[j] != Real(0)) row[j] -= factor * prow[j];
      }
      row[enter] = Real(0);
    }
    const Real cfac = cost[enter];
    if (cfac != Real(0)) {
      for (int j = 0; j < ncols; ++j) {
        if (prow[j] != Real(0)) cost[j] -= cfac * prow[j];
      }
      cost[enter] = Real(0);
    }
  }

  sol.x.assign(nv, Real(0));
  for (int j = 0; j < nv; ++j) {
    if (!in_basis[j] && at_upper[j]) sol.x[j] = prob.upper[j];
  }
  for (int i = 0; i < m; ++i) {
    if (basis[i] < nv) {
      Real v = xb[i];
      if (!SimplexTraits<Real>::kExact) {
        if (v < Real(0)) v = Real(0);
        if (has_ub(basis[i]) && v > prob.upper[basis[i]]) v = prob.upper[basis[i]];
      }
      sol.x[basis[i]] = v;
    }
  }
  sol.objective = Real(0);
  for (int j = 0; j < nv; ++j) sol.objective += prob.objective[j] * sol.x[j];
  return sol;
}

}  // namespace multicover

#endif  // MULTICOVER_SIMPLEX_HPP_
