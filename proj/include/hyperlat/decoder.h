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

#ifndef HYPERLAT_DECODER_H
#define HYPERLAT_DECODER_H

#include <iosfwd>
#include <utility>
#include <vector>

#include "hyperlat/css.h"
#include "hyperlat/lattice.h"

namespace hyperlat {

/// Vertices whose X check is violated, ascending.
struct Syndrome {
    std::vector<int> defects;
};

struct Matching {
    /// Matched defect vertices, each pair ascending, sorted.
    std::vector<std::pair<int, int>> pairs;
    /// Edge ids of a shortest path per pair.
    std::vector<std::vector<int>> paths;
    long total_weight = 0;
    /// Sum of the paths over GF(2).
    EdgeVector correction;
};

Syndrome extract_syndrome(const CssCode &code, const EdgeVector &error);

/// Exact minimum-weight perfect matching of the defects under graph
/// distance. Throws OddDefectCount.
Matching decode(const PeriodicGraph &gpbc, const Syndrome &s);

/// Whether error + correction is a non-trivial cycle. Decided by the parity
/// against the X logicals and cross-checked by span membership; disagreement
/// throws InvariantViolation. Throws ResidualHasSyndrome if the residual is
/// not a cycle.
bool residual_is_logical(const CssCode &code, const EdgeVector &error, const EdgeVector &correction);

void write_decode_dump(const Syndrome &s, const Matching &m, std::ostream &out);

}  // namespace hyperlat

#endif  // HYPERLAT_DECODER_H
