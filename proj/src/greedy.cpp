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

#include "multicover/greedy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace multicover {

namespace {

mpz_class ipow(std::int64_t base, int exp) {
  mpz_class b = static_cast<long>(base);
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

// texp_tab[k] = p^k * q^(f-1-k) for k in [0, f), texp_tab[f] = 0.
std::vector<mpz_class> payout_table(const RationalLambda& lambda, int fold) {
  std::vector<mpz_class> tab(fold + 1);
  tab[0] = ipow(lambda.den, fold - 1);
  for (int k = 1; k < fold; ++k) {
    tab[k] = tab[k - 1] * lambda.num;
    mpz_divexact_ui(tab[k].get_mpz_t(), tab[k].get_mpz_t(),
                    static_cast<unsigned long>(lambda.den));
  }
  tab[fold] = 0;
  return tab;
}

// suffix[k] = sum of texp_tab[i] for i in [k, f); suffix[f] = 0.
std::vector<mpz_class> suffix_table(const std::vector<mpz_class>& tab) {
  int fold = static_cast<int>(tab.size()) - 1;
  std::vector<mpz_class> suffix(fold + 1);
  suffix[fold] = 0;
  for (int k = fold - 1; k >= 0; --k) suffix[k] = suffix[k + 1] + tab[k];
  return suffix;
}

void check_fold(int fold) {
  if (fold <= 0) throw std::invalid_argument("fold must be positive");
}

void check_state(const Hypergraph& hg, const CoverState& k) {
  if (static_cast<int>(k.size()) != hg.edge_count()) {
    throw std::invalid_argument("cover state has " + std::to_string(k.size()) +
                                " entries for " + std::to_string(hg.edge_count()) + " edges");
  }
}

}  // namespace

mpz_class payout_scale(const RationalLambda& lambda, int fold) {
  check_fold(fold);
  return ipow(lambda.den, fold - 1);
}

mpz_class texp(const RationalLambda& lambda, int k, int fold) {
  check_fold(fold);
  if (k < 0) throw std::invalid_argument("state count must be nonnegative");
  if (k >= fold) return 0;
  return ipow(lambda.num, k) * ipow(lambda.den, fold - 1 - k);
}

mpz_class vertex_value(const Hypergraph& hg, const CoverState& k, int x,
                       const RationalLambda& lambda, int fold) {
  check_fold(fold);
  check_state(hg, k);
  if (x < 0 || x >= hg.vertex_count()) {
    throw std::invalid_argument("vertex id " + std::to_string(x) + " out of range");
  }
  auto tab = payout_table(lambda, fold);
  mpz_class total = 0;
  for (int e : hg.incident_edges(x)) total += tab[std::min(k[e], fold)];
  return total;
}

mpz_class total_remaining_value(const Hypergraph& hg, const CoverState& k,
                                const RationalLambda& lambda, int fold) {
  check_fold(fold);
  check_state(hg, k);
  auto suffix = suffix_table(payout_table(lambda, fold));
  mpz_class total = 0;
  for (int e = 0; e < hg.edge_count(); ++e) total += suffix[std::min(k[e], fold)];
  return total;
}

mpz_class GreedyTrace::z_of(const mpz_class& j) const {
  if (j < 1 || j > group_count) {
    throw std::out_of_range("group index out of [1, N]");
  }
  return delta * scale - (j - 1);
}

mpz_class GreedyTrace::remaining_after(const mpz_class& j) const {
  mpz_class total = 0;
  for (const auto& g : groups) {
    if (g.index > j) total += g.z * g.t;
  }
  return total;
}

std::vector<std::pair<mpz_class, std::int64_t>> GreedyTrace::dense_groups(
    std::int64_t limit) const {
  if (group_count > limit) {
    throw std::length_error("group count " + group_count.get_str() +
                            " exceeds dense materialization limit");
  }
  std::int64_t n = group_count.get_si();
  std::vector<std::pair<mpz_class, std::int64_t>> out;
  out.reserve(n);
  for (std::int64_t j = 1; j <= n; ++j) out.emplace_back(z_of(j), 0);
  for (const auto& g : groups) out[g.index.get_si() - 1].second = g.t;
  return out;
}

GreedyResult greedy_solve(const Hypergraph& hg, int fold,
                          const RationalLambda& lambda) {
  check_fold(fold);
  for (int e = 0; e < hg.edge_count(); ++e) {
    if (hg.edge(e).empty()) {
      throw std::invalid_argument("uncoverable edge " + std::to_string(e));
    }
  }
  const int delta = max_degree(hg);
  const int n = hg.vertex_count();
  const int m = hg.edge_count();
  const auto tab = payout_table(lambda, fold);
  const auto suffix = suffix_table(tab);

  GreedyTrace trace;
  trace.scale = tab[0];
  trace.delta = delta;
  trace.fold = fold;
  trace.lambda = lambda;
  trace.group_count = delta * trace.scale - ipow(lambda.num, fold - 1) + 1;
  trace.initial_remaining = m * suffix[0];

  const mpz_class z1 = delta * trace.scale;
  std::vector<mpz_class> values(n, 0);
  for (int v = 0; v < n; ++v) values[v] = hg.degree(v) * trace.scale;

  CoverState k(m, 0);
  int uncovered = m;
  mpz_class remaining = trace.initial_remaining;

  Multiset cover;
  mpz_class cur_index = 0;  // 0 means no open group yet
  mpz_class cur_z;
  std::int64_t cur_t = 0;

  while (uncovered > 0) {
    int best = 0;
    for (int v = 1; v < n; ++v) {
      if (values[v] > values[best]) best = v;
    }
    const mpz_class val = values[best];

    mpz_class j = z1 - val + 1;
    if (j != cur_index) {
      if (cur_t > 0) {
        trace.groups.push_back({cur_index, cur_z, cur_t, remaining});
      }
      cur_index = std::move(j);
      cur_z = val;
      cur_t = 0;
    }
    ++cur_t;
    trace.picks.push_back(best);
    cover.add(best);
    remaining -= val;

    for (int e : hg.incident_edges(best)) {
      if (k[e] >= fold) continue;
      const mpz_class drop = tab[k[e]] - tab[k[e] + 1];
      ++k[e];
      if (k[e] == fold) --uncovered;
      for (int y : hg.edge(e)) values[y] -= drop;
    }
  }
  if (cur_t > 0) trace.groups.push_back({cur_index, cur_z, cur_t, remaining});
  if (remaining != 0) throw std::logic_error("greedy accounting out of balance");
  return GreedyResult{std::move(cover), std::move(trace)};
}

const CoverState& ReplayResult::state_at(const mpz_class& j) const {
  // Largest recorded boundary index <= j; the state is unchanged across
  // groups with t = 0, so that entry is k_j itself.
  auto it = std::upper_bound(boundary_indices.begin(), boundary_indices.end(), j);
  if (it == boundary_indices.begin()) throw std::out_of_range("negative group index");
  return boundary_states[(it - boundary_indices.begin()) - 1];
}

ReplayResult replay_trace(const Hypergraph& hg, int fold,
                          const RationalLambda& lambda,
                          const GreedyTrace& trace) {
  check_fold(fold);
  if (trace.fold != fold || !(trace.lambda == lambda)) {
    throw std::invalid_argument("trace was produced with different parameters");
  }
  const int delta = max_degree(hg);
  const auto tab = payout_table(lambda, fold);
  const auto suffix = suffix_table(tab);
  const mpz_class scale = tab[0];
  const mpz_class z1 = delta * scale;
  if (trace.scale != scale || trace.delta != delta) {
    throw std::invalid_argument("trace scale or degree does not match hypergraph");
  }
  if (trace.group_count != z1 - ipow(lambda.num, fold - 1) + 1) {
    throw std::invalid_argument("trace group count violates the N formula");
  }
  const int m = hg.edge_count();
  CoverState k(m, 0);
  mpz_class v = m * suffix[0];
  if (v != trace.initial_remaining) {
    throw std::invalid_argument("trace initial remaining value mismatch");
  }

  // Suffix sums of t_i * z_i over stored groups.
  std::vector<mpz_class> tail(trace.groups.size() + 1, 0);
  for (std::size_t i = trace.groups.size(); i-- > 0;) {
    tail[i] = tail[i + 1] + trace.groups[i].z * trace.groups[i].t;
  }
  if (tail[0] != v) {
    throw std::invalid_argument("trace group payouts do not sum to v(k_0)");
  }

  ReplayResult out;
  out.boundary_indices.push_back(0);
  out.boundary_states.push_back(k);
  out.boundary_values.push_back(v);

  std::size_t pick_pos = 0;
  mpz_class prev_index = 0;
  for (std::size_t gi = 0; gi < trace.groups.size(); ++gi) {
    const TraceGroup& g = trace.groups[gi];
    if (g.index <= prev_index || g.index > trace.group_count) {
      throw std::invalid_argument("group indices must be increasing in [1, N]");
    }
    prev_index = g.index;
    if (g.z != z1 - (g.index - 1)) {
      throw std::invalid_argument("group " + g.index.get_str() +
                                  " has z off the value grid");
    }
    if (g.t <= 0) throw std::invalid_argument("stored group with t = 0");
    for (std::int64_t s = 0; s < g.t; ++s, ++pick_pos) {
      if (pick_pos >= trace.picks.size()) {
        throw std::invalid_argument("group t-values exceed pick count");
      }
      const int x = trace.picks[pick_pos];
      if (x < 0 || x >= hg.vertex_count()) {
        throw std::invalid_argument("pick " + std::to_string(pick_pos) +
                                    ": vertex " + std::to_string(x) + " out of range");
      }
      mpz_class val = 0;
      for (int e : hg.incident_edges(x)) val += tab[std::min(k[e], fold)];
      if (val != g.z) {
        throw std::invalid_argument(
            "pick " + std::to_string(pick_pos) + " (vertex " + std::to_string(x) +
            "): value " + val.get_str() + ", expected z = " + g.z.get_str());
      }
      for (int e : hg.incident_edges(x)) ++k[e];
      v -= val;
    }
    mpz_class scratch = 0;
    for (int e = 0; e < m; ++e) scratch += suffix[std::min(k[e], fold)];
    if (scratch != v) {
      throw std::invalid_argument("remaining value drifts at group " + g.index.get_str());
    }
    if (v != tail[gi + 1]) {
      throw std::invalid_argument("telescoping identity fails at group " + g.index.get_str());
    }
    if (v != g.remaining) {
      throw std::invalid_argument("recorded v(k_j) wrong at group " + g.index.get_str());
    }
    out.boundary_indices.push_back(g.index);
    out.boundary_states.push_back(k);
    out.boundary_values.push_back(v);
  }
  if (pick_pos != trace.picks.size()) {
    throw std::invalid_argument("pick count exceeds group t-values");
  }
  if (v != 0) throw std::invalid_argument("trace ends with positive remaining value");
  for (int e = 0; e < m; ++e) {
    if (k[e] < fold) {
      throw std::invalid_argument("edge " + std::to_string(e) +
                                  " not covered " + std::to_string(fold) + " times");
    }
  }
  return out;
}

}  // namespace multicover
