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

// Closed-form bound evaluation and certificates tying the solver to the LP
// oracles:
//
//   tau_f <= ((1 - lambda^f)/(1 - lambda)) * tau* * (1 + ln D - (f-1) ln lambda)
//
// plus the 3.153 * max{ln D, f} corollary form, the epsilon-schedule that
// makes greedy output an (1+epsilon)-approximate fractional transversal, and
// the fractional-matching certificate extracted from a greedy state.

#ifndef MULTICOVER_BOUNDS_HPP_
#define MULTICOVER_BOUNDS_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "multicover/greedy.hpp"
#include "multicover/hypergraph.hpp"
#include "multicover/lp.hpp"
#include "multicover/rational.hpp"

namespace multicover {

// lambda anchoring the corollary constant and the constant itself.
inline constexpr double kCorollaryLambda = 0.287643;
inline constexpr double kCorollaryConstant = 3.153;
// Slack applied to the float side of every "size <= bound" comparison.
inline constexpr double kBoundSlack = 1e-9;

// Right-hand side of the main bound. Throws a domain error unless
// lambda is in (0,1). At fold = 1 the value is tau* (1 + ln delta) for
// every lambda.
double theorem1_bound(double tau_star, int delta, int fold, double lambda);

// 3.153 * tau* * max{ln delta, fold}.
double corollary_bound(double tau_star, int delta, int fold);

struct CorollaryScanReport {
  bool all_below_one = false;  // every grid ratio < 1
  bool tight = false;          // some grid ratio >= 0.999
  double max_ratio = 0.0;
  int argmax_fold = 0;
  double argmax_log_delta = 0.0;
};

// Scans fold in {1..100} and ln(delta) in [0, 100] at step 0.01, comparing
// ((1-l^f)/(1-l)) (1 + lnD - (f-1) ln l) at l = 0.287643 against
// 3.153 * max{lnD, f}, and reports the largest ratio found.
CorollaryScanReport verify_corollary_constant();

struct Schedule {
  int fold = 0;
  RationalLambda lambda;
};

// Parameters under which greedy output, divided by fold, is within (1+eps)
// of tau*: lambda is the smallest rational (preferring denominators <= 64)
// at or above the root of -ln(l)/(1-l) = 1 + eps/2, and
// fold = ceil(2 (1 + ln delta)/(eps (1 - lambda))).
Schedule convergence_schedule(double epsilon, double delta);

// Vertex weights multiplicity/fold (clipped at 1) as an exact fractional
// transversal; requires cover to be a fold-fold transversal of hg.
FractionalSolution to_fractional(const Hypergraph& hg, const Multiset& cover,
                                 int fold);

// The fractional matching built from a greedy state ell with all vertex
// values at most z (scaled): w(F) = S(ell(F)) * q^(f-1) / (z * S(0)) where
// S(k) is the scaled payout suffix sum. Exact rationals; feasibility is
// re-verified constraint by constraint. Total weight equals
// v(ell) / (z (1 + lambda + ... + lambda^(f-1))).
FractionalSolution matching_certificate(const Hypergraph& hg,
                                        const CoverState& ell,
                                        const mpz_class& z,
                                        const RationalLambda& lambda, int fold);

struct BoundReport {
  double tau_star = 0.0;
  int delta = 0;
  int fold = 0;
  std::string lambda;
  double bound_value = 0.0;
  std::int64_t greedy_size = 0;
  bool satisfied = false;
};

// Solves hg with the greedy, computes tau* with the requested LP mode, and
// compares the greedy size against theorem1_bound.
BoundReport verify_instance(const Hypergraph& hg, int fold,
                            const RationalLambda& lambda, LpMode mode);

}  // namespace multicover

#endif  // MULTICOVER_BOUNDS_HPP_
