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

// Deterministic instance generators. All randomness is derived from a single
// 64-bit seed through splitmix64, so generated files are identical across
// platforms and reruns.

#ifndef MULTICOVER_GENERATORS_HPP_
#define MULTICOVER_GENERATORS_HPP_

#include <cstdint>

#include "multicover/hypergraph.hpp"

namespace multicover {

struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  // Unbiased draw from [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
};

// m edges whose sizes are uniform in [s_min, s_max] (capped at n) and whose
// vertices are distinct uniform draws from [0, n).
Hypergraph gen_random(int n, int m, int s_min, int s_max, std::uint64_t seed);

// The 7-point projective plane: every two lines meet, every point lies on 3
// lines.
Hypergraph gen_fano();

// Three vertices, three 2-edges.
Hypergraph gen_triangle();

// All pairs on n vertices.
Hypergraph gen_complete_graph(int n);

}  // namespace multicover

#endif  // MULTICOVER_GENERATORS_HPP_
