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

#ifndef HYPERLAT_CYCLES_H
#define HYPERLAT_CYCLES_H

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hyperlat/gf2.h"
#include "hyperlat/lattice.h"

namespace hyperlat {

/// True iff every vertex has even degree in the support.
bool is_cycle(const PeriodicGraph &g, const EdgeVector &v);

/// Breadth-first spanning tree from vertex 0, as sorted edge ids.
/// Throws Disconnected.
std::vector<int> spanning_tree(const PeriodicGraph &g);

/// One cycle per non-tree edge: the edge plus the tree path between its ends.
std::vector<EdgeVector> fundamental_cycle_basis(const PeriodicGraph &g, const std::vector<int> &tree);

/// Exact minimum cycle basis by the witness method. Throws Disconnected.
std::vector<EdgeVector> minimum_cycle_basis(const PeriodicGraph &g);

/// Shortest cycle with odd inner product against `witness`, found by
/// breadth-first search in the two-sheeted lift where witness edges switch
/// sheets. Ties go to the lexicographically smallest edge set. Returns
/// nothing when every cycle is even against the witness.
std::optional<EdgeVector> shortest_odd_cycle(const PeriodicGraph &g, const EdgeVector &witness);

/// Length of that cycle, or -1. Cheaper than shortest_odd_cycle; it skips
/// path recovery.
int shortest_odd_cycle_length(const PeriodicGraph &g, const EdgeVector &witness);

struct HyperbolicCycleBasis {
    /// F - 1 independent plaquettes.
    std::vector<EdgeVector> faces;
    /// The dependent plaquette, sum of the stored ones.
    EdgeVector last_face;
    /// 2h non-contractible cycles.
    std::vector<EdgeVector> logicals;
    /// One line per extraction step.
    std::vector<std::string> witness_history;

    std::vector<EdgeVector> all_faces() const;
    std::size_t dimension() const {
        return faces.size() + logicals.size();
    }
};

/// Plaquettes of the open graph from its minimum cycle basis, then the
/// plaquettes closed by periodic boundaries, then 2h shortest cycles odd
/// against the remaining witnesses. `open` must be an edge subgraph of
/// `gpbc` on the same vertices. Throws BasisIncomplete or InvariantViolation.
HyperbolicCycleBasis hyperbolic_cycle_basis(const PeriodicGraph &open, const PeriodicGraph &gpbc, int face_count);

/// The edges of `gpbc` that are not marked pbc, on the same vertex set.
PeriodicGraph open_subgraph(const PeriodicGraph &gpbc);

/// Post-conditions of a hyperbolic cycle basis. Throws InvariantViolation.
void verify_hyperbolic_cycle_basis(const PeriodicGraph &gpbc, const HyperbolicCycleBasis &hcb);

/// "F" or "L" followed by the sorted 1-based edge ids, one element per line.
void write_hcb(const HyperbolicCycleBasis &hcb, std::ostream &out);

}  // namespace hyperlat

#endif  // HYPERLAT_CYCLES_H
