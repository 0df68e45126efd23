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

#ifndef MULTICOVER_HYPERGRAPH_HPP
#define MULTICOVER_HYPERGRAPH_HPP

#include <cstdint>
#include <map>
#include <vector>

namespace multicover {

// A finite hypergraph on vertex ids 0..n-1. Edges are stored as sorted
// vertex-id lists; duplicate edges are retained. A per-vertex incidence
// index is built at construction, after which the object is immutable and
// safe to share across threads.
//
// Empty edges and an empty edge list are representable (they round-trip
// through files); operations that need covering-feasible input reject them
// at their own entry points.
class Hypergraph {
 public:
  Hypergraph(int vertex_count, std::vector<std::vector<int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  const std::vector<int>& edge(int index) const { return edges_[index]; }

  // Indices of the edges containing the given vertex.
  const std::vector<int>& incident_edges(int vertex) const { return incident_[vertex]; }
  int degree(int vertex) const { return static_cast<int>(incident_[vertex].size()); }

  // Sum of edge sizes == number of (vertex, edge) incidence pairs.
  std::int64_t incidence_count() const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> edges_;
  std::vector<std::vector<int>> incident_;
};

// A multiset of vertices, the candidate f-fold transversal shape.
class Multiset {
 public:
  Multiset() = default;

  void add(int vertex, int count = 1);
  int multiplicity(int vertex) const;
  // Total size counted with multiplicity.
  std::int64_t size() const { return size_; }
  const std::map<int, int>& counts() const { return counts_; }

 private:
  std::map<int, int> counts_;
  std::int64_t size_ = 0;
};

// Maximum number of edges any single vertex is contained in.
// Throws std::invalid_argument("no edges") when the edge list is empty.
int max_degree(const Hypergraph& hg);

// True iff every edge contains at least `fold` elements of `picks`, counted
// with multiplicity.
bool is_f_fold_transversal(const Hypergraph& hg, const Multiset& picks, int fold);

// Combinatorial dual: vertex j of the result is edge j of the input, edge i
// of the result is the set of input edges containing vertex i. Duplicate
// edges are retained; isolated input vertices become empty dual edges.
Hypergraph dualize(const Hypergraph& hg);

}  // namespace multicover

#endif  // MULTICOVER_HYPERGRAPH_HPP
