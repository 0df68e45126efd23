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

// Weighted greedy solver for f-fold transversals.
//
// Payouts use the truncated exponential texp(k) = lambda^k for k < f and 0
// for k >= f, with lambda = p/q. All solver arithmetic is on integers scaled
// by q^(f-1): the payout of an edge hit k times is p^k * q^(f-1-k). Pick
// values are therefore exact, and the run decomposes into step groups of
// equal value z_j = Delta*q^(f-1) - (j-1) for j = 1..N with
// N = q^(f-1)*Delta - p^(f-1) + 1.

#ifndef MULTICOVER_GREEDY_HPP_
#define MULTICOVER_GREEDY_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "multicover/hypergraph.hpp"
#include "multicover/rational.hpp"

namespace multicover {

// Per-edge pick counts ("current state"); index parallels Hypergraph::edges().
using CoverState = std::vector<int>;

// q^(f-1), the common denominator of all step payouts.
mpz_class payout_scale(const RationalLambda& lambda, int fold);

// Scaled truncated exponential: p^k * q^(f-1-k) for k < f, else 0.
mpz_class texp(const RationalLambda& lambda, int k, int fold);

// Scaled value of picking x at state k: sum of texp over edges containing x.
mpz_class vertex_value(const Hypergraph& hg, const CoverState& k, int x,
                       const RationalLambda& lambda, int fold);

// Scaled total remaining value of state k: the total payout all future picks
// can still collect. Zero iff every edge is covered at least fold times.
mpz_class total_remaining_value(const Hypergraph& hg, const CoverState& k,
                                const RationalLambda& lambda, int fold);

// One step group: t consecutive picks, each of scaled value z, where
// z = Delta*q^(f-1) - (index-1). Only groups with t > 0 are stored; a group
// index absent from the list has t = 0 and leaves the remaining value
// unchanged, so the stored entries determine all N groups.
struct TraceGroup {
  mpz_class index;      // j, 1-based in [1, N]
  mpz_class z;          // scaled group value z_j
  std::int64_t t = 0;   // number of picks in the group
  mpz_class remaining;  // v(k_j): scaled remaining value after the group
};

struct GreedyTrace {
  std::vector<int> picks;          // picked vertices in order
  std::vector<TraceGroup> groups;  // nonempty groups, increasing index
  mpz_class group_count;           // N = q^(f-1)*Delta - p^(f-1) + 1
  mpz_class scale;                 // q^(f-1)
  mpz_class initial_remaining;     // v(k_0)
  int delta = 0;                   // max degree of the instance
  int fold = 1;
  RationalLambda lambda;

  // z_j for any group index j in [1, N].
  mpz_class z_of(const mpz_class& j) const;
  // Sum of t_i * z_i over stored groups with index > j (the right-hand side
  // of the telescoping identity for v(k_j)).
  mpz_class remaining_after(const mpz_class& j) const;
  // (z_j, t_j) for every j = 1..N, zero groups included. Throws if N > limit.
  std::vector<std::pair<mpz_class, std::int64_t>> dense_groups(
      std::int64_t limit = 1 << 20) const;
};

struct GreedyResult {
  Multiset cover;
  GreedyTrace trace;
};

// Runs the weighted greedy until every edge is covered at least fold times.
// Ties are broken toward the lowest vertex id. Throws "uncoverable edge" if
// some edge is empty and "no edges" if the edge list is empty.
GreedyResult greedy_solve(const Hypergraph& hg, int fold,
                          const RationalLambda& lambda);

// States and values at the recorded group boundaries: entry 0 is k_0, entry
// i > 0 is the state right after stored group i-1. Between two recorded
// boundaries no picks happen, so these determine k_j and v(k_j) for all j.
struct ReplayResult {
  std::vector<mpz_class> boundary_indices;
  std::vector<CoverState> boundary_states;
  std::vector<mpz_class> boundary_values;

  // k_j for any j in [0, N].
  const CoverState& state_at(const mpz_class& j) const;
};

// Re-executes a trace against hg, recomputing every pick's value and every
// recorded boundary's remaining value from scratch. Verifies that each pick
// in group j has value exactly z_j and that v(k_j) matches the telescoping
// sum; throws on the first inconsistency, identifying the offending pick.
ReplayResult replay_trace(const Hypergraph& hg, int fold,
                          const RationalLambda& lambda,
                          const GreedyTrace& trace);

}  // namespace multicover

#endif  // MULTICOVER_GREEDY_HPP_
