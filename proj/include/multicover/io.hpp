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

// JSON wire formats for hypergraphs and vertex multisets.
//
// A hypergraph is {"n": <int>, "edges": [[v, ...], ...]} and a multiset is
// {"picks": [[vertex, multiplicity], ...]}. Parsing reports the offending
// field on malformed input; serialization is canonical (sorted edges, sorted
// pick vertices) so parse(serialize(x)) == x.

#ifndef MULTICOVER_IO_HPP_
#define MULTICOVER_IO_HPP_

#include <string>

#include "multicover/bounds.hpp"
#include "multicover/exact.hpp"
#include "multicover/greedy.hpp"
#include "multicover/hypergraph.hpp"
#include "multicover/lp.hpp"

namespace multicover {

Hypergraph parse_hypergraph(const std::string& text);
std::string serialize_hypergraph(const Hypergraph& hg);

Multiset parse_multiset(const std::string& text);
std::string serialize_multiset(const Multiset& ms);

// {"picks", "multiset", "size", "groups", "lambda", "f"}. Groups are listed
// densely (zero-t entries included) while N fits under the dense limit and
// as the stored nonempty entries otherwise; indices wider than 64 bits are
// emitted as decimal strings.
std::string serialize_solution(const GreedyResult& result,
                               std::int64_t dense_limit = 4096);

// {"objective": "num/den" or float, "weights": [...]}.
std::string serialize_lp(const FractionalSolution& sol);

// {"tau_f", "witness", "nodes"}.
std::string serialize_exact(const ExactResult& result);

std::string serialize_bound_report(const BoundReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace multicover

#endif  // MULTICOVER_IO_HPP_
