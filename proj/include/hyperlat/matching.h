// Copyright 2026 The Hyperlat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERLAT_MATCHING_H
#define HYPERLAT_MATCHING_H

#include <cstdint>
#include <vector>

namespace hyperlat {

struct WeightedEdge {
    int u;
    int v;
    std::int64_t weight;
};

/// Maximum-weight matching on a general graph by the primal-dual blossom
/// method, O(n^3). With `max_cardinality` the result is the heaviest among
/// the maximum-cardinality matchings. Returns mate[v], or -1 if unmatched.
std::vector<int> max_weight_matching(int vertex_count, const std::vector<WeightedEdge> &edges, bool max_cardinality);

/// Minimum-weight perfect matching on the complete graph with the given
/// symmetric non-negative distance matrix (even size). Returns mate[v].
std::vector<int> min_weight_perfect_matching(const std::vector<std::vector<int>> &distance);

}  // namespace hyperlat

#endif  // HYPERLAT_MATCHING_H
