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

// Ground-truth tau_f by branch and bound, for tiny instances only.

#ifndef MULTICOVER_EXACT_HPP_
#define MULTICOVER_EXACT_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

#include "multicover/hypergraph.hpp"
#include "multicover/rational.hpp"

namespace multicover {

struct ExactResult {
  int tau_f = 0;
  Multiset witness;
  std::int64_t nodes = 0;
};

class NodeBudgetExceeded : public std::runtime_error {
 public:
  NodeBudgetExceeded(int incumbent, int lower_bound, std::int64_t nodes);
  int incumbent;
  int lower_bound;
  std::int64_t nodes;
};

// Minimum size of an f-fold transversal plus one witness. Branches on the
// edge with the smallest positive slack; never uses more than fold copies of
// one vertex; prunes with the exact LP bound ceil(fold * tau*) and a
// dominance table over coverage states. Intended for n <= 15, m <= 25,
// fold <= 4. Throws NodeBudgetExceeded past the node budget.
ExactResult exact_tau_f(const Hypergraph& hg, int fold,
                        std::int64_t node_budget = 20000000);

struct SandwichReport {
  mpq_class f_tau_star;  // fold * tau*, exact
  int tau_f = 0;
  std::int64_t greedy_size = 0;
  bool ok = false;
};

// Asserts fold * tau* <= tau_f <= |greedy_solve(hg, fold, lambda)| and
// returns the three numbers.
SandwichReport sandwich_check(const Hypergraph& hg, int fold,
                              const RationalLambda& lambda);

}  // namespace multicover

#endif  // MULTICOVER_EXACT_HPP_
