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

#include "multicover/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace multicover {

namespace {

mpz_class ipow(std::int64_t base, int exp) {
  mpz_class b = static_cast<long>(base);
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

// suffix[k] = sum_{i=k}^{f-1} p^i q^(f-1-i), suffix[f] = 0.
std::vector<mpz_class> payout_suffixes(const RationalLambda& lambda, int fold) {
  std::vector<mpz_class> tab(fold + 1);
  tab[0] = ipow(lambda.den, fold - 1);
  for (int k = 1; k < fold; ++k) {
    tab[k] = tab[k - 1] * lambda.num;
    mpz_divexact_ui(tab[k].get_mpz_t(), tab[k].get_mpz_t(),
                    static_cast<unsigned long>(lambda.den));
  }
  std::vector<mpz_class> suffix(fold + 1);
  suffix[fold] = 0;
  for (int k = fold - 1; k >= 0; --k) suffix[k] = suffix[k + 1] + tab[k];
  return suffix;
}

double schedule_constraint(double lambda) { return -std::log(lambda) / (1.0 - lambda); }

}  // namespace

double theorem1_bound(double tau_star, int delta, int fold, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw std::domain_error("lambda must lie in (0,1)");
  }
  if (tau_star <= 0.0 || delta < 1 || fold < 1) {
    throw std::invalid_argument("need tau* > 0, delta >= 1, fold >= 1");
  }
  double series = (1.0 - std::pow(lambda, fold)) / (1.0 - lambda);
  return series * tau_star * (1.0 + std::log(delta) - (fold - 1) * std::log(lambda));
}

double corollary_bound(double tau_star, int delta, int fold) {
  if (tau_star <= 0.0 || delta < 1 || fold < 1) {
    throw std::invalid_argument("need tau* > 0, delta >= 1, fold >= 1");
  }
  return kCorollaryConstant * tau_star * std::max(std::log(delta), double(fold));
}

CorollaryScanReport verify_corollary_constant() {
  const double lambda = kCorollaryLambda;
  const double log_lambda = std::log(lambda);
  CorollaryScanReport report;
  for (int fold = 1; fold <= 100; ++fold) {
    const double series = (1.0 - std::pow(lambda, fold)) / (1.0 - lambda);
    const double base = 1.0 - (fold - 1) * log_lambda;
    for (int i = 0; i <= 10000; ++i) {
      const double log_delta = 0.01 * i;
      const double lhs = series * (base + log_delta);
      const double rhs = kCorollaryConstant * std::max(log_delta, double(fold));
      const double ratio = lhs / rhs;
      if (ratio > report.max_ratio) {
        report.max_ratio = ratio;
        report.argmax_fold = fold;
        report.argmax_log_delta = log_delta;
      }
    }
  }
  report.all_below_one = report.max_ratio < 1.0;
  report.tight = report.max_ratio >= 0.999;
  return report;
}

Schedule convergence_schedule(double epsilon, double delta) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0,1]");
  }
  if (delta < 1.0) throw std::invalid_argument("delta must be >= 1");
  const double target = 1.0 + epsilon / 2.0;

  // -ln(l)/(1-l) decreases from infinity to 1 on (0,1); bisect for its root
  // at the target, then take the smallest rational at or above the root.
  double lo = 1e-12, hi = 1.0 - 1e-12;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (schedule_constraint(mid) <= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const double root = hi;

  Schedule sched;
  bool found = false;
  for (std::int64_t q = 2; q <= 1000000 && !found; ++q) {
    std::int64_t p = static_cast<std::int64_t>(std::ceil(root * q - 1e-12));
    if (p < 1) p = 1;
    for (; p < q; ++p) {
      double cand = double(p) / double(q);
      if (cand >= root - 1e-12 && schedule_constraint(cand) <= target + 1e-12) {
        sched.lambda = RationalLambda(p, q);
        found = true;
        break;
      }
    }
  }
  if (!found) throw std::logic_error("no rational lambda satisfies the schedule constraint");

  double f = 2.0 * (1.0 + std::log(delta)) / (epsilon * (1.0 - sched.lambda.value()));
  sched.fold = static_cast<int>(std::ceil(f - 1e-9));
  if (sched.fold < 1) sched.fold = 1;
  return sched;
}

FractionalSolution to_fractional(const Hypergraph& hg, const Multiset& cover,
                                 int fold) {
  if (fold <= 0) throw std::invalid_argument("fold must be positive");
  if (!is_f_fold_transversal(hg, cover, fold)) {
    throw std::invalid_argument("multiset is not an f-fold transversal");
  }
  FractionalSolution sol;
  sol.side = WeightSide::kVertex;
  sol.exact = true;
  sol.weights.assign(hg.vertex_count(), mpq_class(0));
  sol.objective = 0;
  for (const auto& [v, c] : cover.counts()) {
    sol.weights[v] = mpq_class(std::min(c, fold), fold);
    sol.weights[v].canonicalize();
    sol.objective += sol.weights[v];
  }
  for (int e = 0; e < hg.edge_count(); ++e) {
    mpq_class s = 0;
    for (int x : hg.edge(e)) s += sol.weights[x];
    if (s < 1) throw std::logic_error("clipped weights infeasible at edge " +
                                      std::to_string(e));
  }
  return sol;
}

FractionalSolution matching_certificate(const Hypergraph& hg,
                                        const CoverState& ell,
                                        const mpz_class& z,
                                        const RationalLambda& lambda, int fold) {
  if (fold <= 0) throw std::invalid_argument("fold must be positive");
  if (static_cast<int>(ell.size()) != hg.edge_count()) {
    throw std::invalid_argument("state size does not match edge count");
  }
  if (z <= 0) throw std::invalid_argument("z must be positive");
  for (int e = 0; e < hg.edge_count(); ++e) {
    if (hg.edge(e).empty()) throw std::invalid_argument("empty edge " + std::to_string(e));
  }
  const auto suffix = payout_suffixes(lambda, fold);
  const mpz_class scale = ipow(lambda.den, fold - 1);

  // Certificate hypothesis: every vertex value is at most z.
  std::vector<mpz_class> payout(fold + 1);
  for (int k = 0; k <= fold; ++k) payout[k] = suffix[k] - suffix[std::min(k + 1, fold)];
  for (int x = 0; x < hg.vertex_count(); ++x) {
    mpz_class val = 0;
    for (int e : hg.incident_edges(x)) val += payout[std::min(ell[e], fold)];
    if (val > z) {
      throw std::invalid_argument("vertex " + std::to_string(x) + " has value " +
                                  val.get_str() + " > z = " + z.get_str());
    }
  }

  FractionalSolution sol;
  sol.side = WeightSide::kEdge;
  sol.exact = true;
  sol.weights.resize(hg.edge_count());
  sol.objective = 0;
  const mpz_class denom = z * suffix[0];
  for (int e = 0; e < hg.edge_count(); ++e) {
    mpq_class w(suffix[std::min(ell[e], fold)] * scale, denom);
    w.canonicalize();
    sol.weights[e] = w;
    sol.objective += w;
    if (w < 0 || w > 1) throw std::logic_error("certificate weight out of [0,1]");
  }
  for (int x = 0; x < hg.vertex_count(); ++x) {
    mpq_class s = 0;
    for (int e : hg.incident_edges(x)) s += sol.weights[e];
    if (s > 1) throw std::logic_error("certificate infeasible at vertex " +
                                      std::to_string(x));
  }
  return sol;
}

BoundReport verify_instance(const Hypergraph& hg, int fold,
                            const RationalLambda& lambda, LpMode mode) {
  BoundReport report;
  report.delta = max_degree(hg);
  report.fold = fold;
  report.lambda = lambda.str();
  FractionalSolution lp = fractional_transversal(hg, mode);
  report.tau_star = lp.objective_value();
  report.greedy_size = greedy_solve(hg, fold, lambda).cover.size();
  report.bound_value = theorem1_bound(report.tau_star, report.delta, fold, lambda.value());
  report.satisfied = report.greedy_size <= report.bound_value + kBoundSlack;
  return report;
}

}  // namespace multicover
