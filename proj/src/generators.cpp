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

#include "multicover/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace multicover {

std::uint64_t SplitMix64::next() {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be positive");
  std::uint64_t threshold = -bound % bound;
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

Hypergraph gen_random(int n, int m, int s_min, int s_max, std::uint64_t seed) {
  if (n < 1 || m < 0 || s_min < 1 || s_max < s_min) {
    throw std::invalid_argument("invalid random-instance parameters");
  }
  SplitMix64 rng(seed);
  std::vector<std::vector<int>> edges(m);
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int e = 0; e < m; ++e) {
    int size = s_min + static_cast<int>(rng.below(s_max - s_min + 1));
    size = std::min(size, n);
    // Partial Fisher-Yates over a shared pool.
    for (int i = 0; i < size; ++i) {
      int j = i + static_cast<int>(rng.below(n - i));
      std::swap(pool[i], pool[j]);
    }
    edges[e].assign(pool.begin(), pool.begin() + size);
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph gen_fano() {
  return Hypergraph(7, {{0, 1, 2},
                        {0, 3, 4},
                        {0, 5, 6},
                        {1, 3, 5},
                        {1, 4, 6},
                        {2, 3, 6},
                        {2, 4, 5}});
}

Hypergraph gen_triangle() { return Hypergraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

Hypergraph gen_complete_graph(int n) {
  if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
  std::vector<std::vector<int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Hypergraph(n, std::move(edges));
}

}  // namespace multicover
