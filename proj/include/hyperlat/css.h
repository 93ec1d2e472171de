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

#ifndef HYPERLAT_CSS_H
#define HYPERLAT_CSS_H

#include <iosfwd>
#include <vector>

#include "hyperlat/cycles.h"
#include "hyperlat/gf2.h"
#include "hyperlat/lattice.h"

namespace hyperlat {

/// CSS code with qubits on the edges of a periodic lattice. All vectors are
/// indexed by the lattice's edge ids; dual edge i is primal edge i.
struct CssCode {
    int n = 0;
    int k = 0;
    int face_degree = 0;
    int vertex_degree = 0;
    /// Face boundaries, one row per face (Z checks).
    std::vector<EdgeVector> hz;
    /// Vertex stars, one row per vertex (X checks).
    std::vector<EdgeVector> hx;
    std::vector<EdgeVector> z_logicals;
    std::vector<EdgeVector> x_logicals;
    /// Endpoints of each edge: the two X checks it touches.
    std::vector<GraphEdge> edge_checks;
    /// Row echelon form of hz, for residual classification.
    EchelonBasis hz_span{0};
};

/// Builds the code from the primal basis and the basis of the dual graph.
/// Throws PairingDegenerate or InvariantViolation.
CssCode assemble(const PeriodicGraph &gpbc, const HyperbolicCycleBasis &hcb, const HyperbolicCycleBasis &dual_hcb);

/// GF(2) pairing matrix M[i][j] = <z_i, x_j>.
std::vector<BitVector> pairing_matrix(const std::vector<EdgeVector> &z_logicals,
                                      const std::vector<EdgeVector> &x_logicals);

/// Minimum weight of a cycle of g odd against at least one of the given
/// cocycles, by the double-cover search per cocycle.
int distance_Z(const PeriodicGraph &gpbc, const std::vector<EdgeVector> &x_logicals);
/// The same search on the dual graph with the primal cycles as cocycles.
int distance_X(const PeriodicGraph &dual, const std::vector<EdgeVector> &z_logicals);

/// Header "n k dZ dX p q N h", then H_Z, H_X, Z logicals and X logicals as
/// sections of sorted 1-based edge ids (the edge-list line numbers).
void write_code(const CssCode &code, int dz, int dx, int cells, std::ostream &out);

}  // namespace hyperlat

#endif  // HYPERLAT_CSS_H
