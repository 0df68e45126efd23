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

#include "multicover/exact.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "multicover/greedy.hpp"
#include "multicover/lp.hpp"

namespace multicover {

namespace {

struct Search {
  const Hypergraph& hg;
  int fold;
  std::int64_t budget;
  int delta;
  std::int64_t nodes = 0;
  int best;
  std::vector<int> best_counts;
  int lower_bound;
  std::vector<int> counts;    // picks per vertex
  std::vector<int> coverage;  // picks per edge, with multiplicity
  std::unordered_map<std::string, int> seen;  // coverage-state -> fewest picks

  Search(const Hypergraph& h, int f, std::int64_t b)
      : hg(h), fold(f), budget(b), delta(max_degree(h)), best(0), lower_bound(0) {}

  std::string key() const {
    return std::string(reinterpret_cast<const char*>(counts.data()),
                       counts.size() * sizeof(int));
  }

  int remaining_bound() const {
    // Each pick covers at most deg(x) <= Delta deficient edges once, and an
    // edge with slack s needs s more picks on its own.
    int max_slack = 0;
    long total = 0;
    for (int e = 0; e < hg.edge_count(); ++e) {
      int s = fold - coverage[e];
      if (s > 0) {
        max_slack = std::max(max_slack, s);
        total += s;
      }
    }
    if (total == 0) return 0;
    int spread = static_cast<int>((total + delta - 1) / delta);
    return std::max(max_slack, spread);
  }

  void dfs(int picks) {
    if (++nodes > budget) {
      throw NodeBudgetExceeded(best, lower_bound, nodes);
    }
    int target = -1;
    int target_slack = 0;
    for (int e = 0; e < hg.edge_count(); ++e) {
      int s = fold - coverage[e];
      if (s > 0 && (target < 0 || s < target_slack)) {
        target = e;
        target_slack = s;
      }
    }
    if (target < 0) {
      if (picks < best) {
        best = picks;
        best_counts = counts;
      }
      return;
    }
    if (picks + remaining_bound() >= best) return;
    auto it = seen.find(key());
    if (it != seen.end() && it->second <= picks) return;
    seen[key()] = picks;
    for (int x : hg.edge(target)) {
      if (counts[x] >= fold) continue;
      ++counts[x];
      for (int e : hg.incident_edges(x)) ++coverage[e];
      dfs(picks + 1);
      for (int e : hg.incident_edges(x)) --coverage[e];
      --counts[x];
      if (best <= lower_bound) return;
    }
  }
};

}  // namespace

NodeBudgetExceeded::NodeBudgetExceeded(int inc, int lb, std::int64_t n)
    : std::runtime_error("node budget exceeded: best incumbent " +
                         std::to_string(inc) + ", lower bound " +
                         std::to_string(lb) + ", nodes " + std::to_string(n)),
      incumbent(inc),
      lower_bound(lb),
      nodes(n) {}

ExactResult exact_tau_f(const Hypergraph& hg, int fold, std::int64_t node_budget) {
  if (fold <= 0) throw std::invalid_argument("fold must be positive");
  for (int e = 0; e < hg.edge_count(); ++e) {
    if (hg.edge(e).empty()) {
      throw std::invalid_argument("uncoverable edge " + std::to_string(e));
    }
  }
  if (hg.edge_count() == 0) throw std::invalid_argument("no edges");

  Search search(hg, fold, node_budget);
  GreedyResult seed = greedy_solve(hg, fold, RationalLambda());
  search.best = static_cast<int>(seed.cover.size());
  search.best_counts.assign(hg.vertex_count(), 0);
  for (const auto& [v, c] : seed.cover.counts()) search.best_counts[v] = c;

  FractionalSolution lp = fractional_transversal(hg, LpMode::kExact);
  mpq_class scaled = fold * lp.objective;
  mpz_class lb;
  mpz_cdiv_q(lb.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
  search.lower_bound = static_cast<int>(lb.get_si());

  search.counts.assign(hg.vertex_count(), 0);
  search.coverage.assign(hg.edge_count(), 0);
  if (search.best > search.lower_bound) search.dfs(0);

  ExactResult out;
  out.tau_f = search.best;
  out.nodes = search.nodes;
  for (int v = 0; v < hg.vertex_count(); ++v) {
    if (search.best_counts[v] > 0) out.witness.add(v, search.best_counts[v]);
  }
  return out;
}

SandwichReport sandwich_check(const Hypergraph& hg, int fold,
                              const RationalLambda& lambda) {
  SandwichReport report;
  FractionalSolution lp = fractional_transversal(hg, LpMode::kExact);
  report.f_tau_star = fold * lp.objective;
  report.tau_f = exact_tau_f(hg, fold).tau_f;
  report.greedy_size = greedy_solve(hg, fold, lambda).cover.size();
  report.ok = report.f_tau_star <= report.tau_f &&
              report.tau_f <= static_cast<int>(report.greedy_size);
  return report;
}

}  // namespace multicover
