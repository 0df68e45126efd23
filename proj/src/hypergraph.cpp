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

#include "multicover/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace multicover {

Hypergraph::Hypergraph(int vertex_count, std::vector<std::vector<int>> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    std::sort(e.begin(), e.end());
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] < 0 || e[j] >= n_) {
        throw std::invalid_argument("edges[" + std::to_string(i) + "][" + std::to_string(j) +
                                    "]: vertex id " + std::to_string(e[j]) +
                                    " out of range [0, " + std::to_string(n_) + ")");
      }
      if (j > 0 && e[j] == e[j - 1]) {
        throw std::invalid_argument("edges[" + std::to_string(i) + "]: duplicate vertex id " +
                                    std::to_string(e[j]) + " (edges are sets)");
      }
    }
  }
  incident_.assign(n_, {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (int v : edges_[i]) incident_[v].push_back(static_cast<int>(i));
  }
}

std::int64_t Hypergraph::incidence_count() const {
  std::int64_t total = 0;
  for (const auto& e : edges_) total += static_cast<std::int64_t>(e.size());
  return total;
}

void Multiset::add(int vertex, int count) {
  if (count <= 0) throw std::invalid_argument("multiplicity must be >= 1");
  counts_[vertex] += count;
  size_ += count;
}

int Multiset::multiplicity(int vertex) const {
  auto it = counts_.find(vertex);
  return it == counts_.end() ? 0 : it->second;
}

int max_degree(const Hypergraph& hg) {
  if (hg.edge_count() == 0) throw std::invalid_argument("no edges");
  int best = 0;
  for (int v = 0; v < hg.vertex_count(); ++v) best = std::max(best, hg.degree(v));
  return best;
}

bool is_f_fold_transversal(const Hypergraph& hg, const Multiset& picks, int fold) {
  if (fold <= 0) throw std::invalid_argument("fold must be positive");
  for (const auto& [v, c] : picks.counts()) {
    if (v < 0 || v >= hg.vertex_count()) {
      throw std::invalid_argument("multiset vertex id " + std::to_string(v) + " out of range");
    }
    (void)c;
  }
  for (const auto& edge : hg.edges()) {
    std::int64_t hits = 0;
    for (int v : edge) hits += picks.multiplicity(v);
    if (hits < fold) return false;
  }
  return true;
}

Hypergraph dualize(const Hypergraph& hg) {
  std::vector<std::vector<int>> dual_edges(hg.vertex_count());
  for (int v = 0; v < hg.vertex_count(); ++v) dual_edges[v] = hg.incident_edges(v);
  return Hypergraph(hg.edge_count(), std::move(dual_edges));
}

}  // namespace multicover
