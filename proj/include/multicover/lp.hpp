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

// Fractional transversal and fractional matching oracles.
//
// The transversal LP (min sum w, every edge's weight sum >= 1, w in [0,1])
// is solved through the substitution u = 1 - w, which turns it into a
// packing LP with nonnegative right-hand sides, so the all-slack basis is
// feasible. The matching LP is solved directly. Exact mode uses rational
// arithmetic; float mode trades exactness for speed on larger instances.

#ifndef MULTICOVER_LP_HPP_
#define MULTICOVER_LP_HPP_

#include <gmpxx.h>

#include <vector>

#include "multicover/hypergraph.hpp"

namespace multicover {

enum class LpMode { kExact, kFloat };

enum class WeightSide { kVertex, kEdge };

struct FractionalSolution {
  WeightSide side = WeightSide::kVertex;
  bool exact = true;
  std::vector<mpq_class> weights;  // filled in exact mode
  std::vector<double> weights_f;   // filled in float mode
  mpq_class objective;
  double objective_f = 0.0;

  double objective_value() const { return exact ? objective.get_d() : objective_f; }
  std::size_t weight_count() const { return exact ? weights.size() : weights_f.size(); }
  double weight_value(std::size_t i) const {
    return exact ? weights[i].get_d() : weights_f[i];
  }
};

// Minimal fractional transversal; objective is tau*. Returned weights are
// re-verified against the covering constraints before returning.
FractionalSolution fractional_transversal(const Hypergraph& hg, LpMode mode);

// Maximal fractional matching; objective is nu*.
FractionalSolution fractional_matching(const Hypergraph& hg, LpMode mode);

// tau* - nu*. Zero in exact mode by LP duality; in float mode the doubles
// are promoted to rationals, so the result reflects solver error only.
mpq_class duality_gap(const Hypergraph& hg, LpMode mode);

}  // namespace multicover

#endif  // MULTICOVER_LP_HPP_
