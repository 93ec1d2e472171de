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

#ifndef HYPERLAT_LATTICE_H
#define HYPERLAT_LATTICE_H

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "hyperlat/fuchsian.h"
#include "hyperlat/geometry.h"
#include "hyperlat/gf2.h"

namespace hyperlat {

/// Schlafli symbol {p, q}.
struct Pattern {
    int p = 0;
    int q = 0;
    bool operator==(const Pattern &) const = default;
};

using AdjacencyMatrix = std::vector<std::vector<std::uint8_t>>;

/// A translation relating the unit cell to a neighbouring copy.
struct CellLink {
    Word word;
    MobiusTransform element;
    /// adjacency[u][v] == 1 iff site u is a nearest neighbour of element(site v).
    AdjacencyMatrix adjacency;
    int inverse = -1;
};

/// One orbit of lattice edges under the translation group: site `from_site`
/// of a cell joins site `to_site` of the cell reached through `link`
/// (-1 for an edge inside the cell).
struct EdgeSlot {
    int from_site = 0;
    int link = -1;
    int to_site = 0;
};

/// The {p,q} vertices in one Bravais fundamental domain and their
/// intra-/inter-cell adjacency.
struct UnitCell {
    Pattern pattern;
    BravaisSignature bravais;
    /// Phase of the central {p,q} polygon aligned with the Bravais lattice.
    double phase = 0.0;
    std::vector<DiskPoint> sites;
    AdjacencyMatrix intra;
    /// links[2(j-1)] is gamma_j and links[2(j-1)+1] its inverse; longer
    /// words follow.
    std::vector<CellLink> links;
    std::vector<EdgeSlot> slots;
    double edge_length = 0.0;

    /// Intercell matrix I_j for a signed generator index (+j or -j).
    const AdjacencyMatrix &inter(int signed_generator) const;
};

/// Builds the unit cell by breadth-first face generation around the central
/// polygon. Throws CoverageFailure when the generation budget runs out or
/// the site/edge counts disagree with the area-ratio prediction.
UnitCell build_unit_cell(const Pattern &pattern, const GeneratorSet &gs, int max_link_length = 2);

struct GraphEdge {
    int u = 0;
    int v = 0;
};

/// Finite graph of the lattice. Vertex id = coset * sites_per_cell + site.
/// A dart 2e is edge e traversed u -> v, 2e+1 is v -> u.
struct PeriodicGraph {
    struct Incidence {
        int neighbor;
        int edge;
    };

    int vertex_count = 0;
    int cells = 0;
    int sites_per_cell = 0;
    int face_degree = 0;
    int vertex_degree = 0;
    std::vector<GraphEdge> edges;
    /// 1 where the edge exists only after imposing periodic boundaries.
    std::vector<std::uint8_t> pbc;
    /// Embedding of each vertex in the disk; empty when unknown.
    std::vector<DiskPoint> positions;
    /// Darts leaving each vertex in counterclockwise order; empty when unknown.
    std::vector<std::vector<int>> rotation;

    /// Builds the incidence lists. Call after editing `edges`.
    void finalize();

    int edge_count() const {
        return static_cast<int>(edges.size());
    }
    std::span<const Incidence> incident(int v) const {
        return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
    }
    int degree(int v) const {
        return offsets_[v + 1] - offsets_[v];
    }
    bool has_rotation() const {
        return !rotation.empty();
    }
    /// N_F = 2E / p.
    int face_count_hint() const {
        return face_degree > 0 ? 2 * edge_count() / face_degree : 0;
    }
    bool connected() const;

    int dart_tail(int d) const {
        return (d & 1) ? edges[d >> 1].v : edges[d >> 1].u;
    }
    int dart_head(int d) const {
        return (d & 1) ? edges[d >> 1].u : edges[d >> 1].v;
    }

   private:
    std::vector<int> offsets_;
    std::vector<Incidence> incidence_;
};

/// Cells translated by the given words, joined at nearest-neighbour distance.
/// words[0] must be the empty word.
PeriodicGraph build_open_graph(const UnitCell &cell, const GeneratorSet &gs, const std::vector<Word> &words);

/// I_N (x) V plus the intercell blocks from the coset action. Edges present
/// between breadth-first transversal copies in the plane are marked open,
/// the rest pbc. Throws DegreeViolation or InvariantViolation.
PeriodicGraph build_periodic_graph(const UnitCell &cell, const GeneratorSet &gs, const QuotientSpec &spec);

struct PredictedCounts {
    long vertices = 0;
    long edges = 0;
    long faces = 0;
    long genus = 0;
    long n = 0;
    long k = 0;
};

/// Counts from Gauss-Bonnet, Riemann-Hurwitz and pF = 2E = qV.
/// Throws NonIntegerCount.
PredictedCounts predicted_counts(const Pattern &pattern, const BravaisSignature &bravais, int index);

/// Genus from the Euler characteristic with F = 2E/p.
long euler_genus(const PeriodicGraph &g);

/// Dual graph: one vertex per face, dual edge i crosses primal edge i.
/// Throws NotTwoManifold unless every edge lies in exactly two faces.
PeriodicGraph dual_graph(const PeriodicGraph &g, const std::vector<EdgeVector> &faces);

/// Orbits of the face permutation (rotate after reversing); requires a
/// rotation system. Each walk is a list of darts.
std::vector<std::vector<int>> facial_walks(const PeriodicGraph &g);
std::vector<EdgeVector> faces_from_embedding(const PeriodicGraph &g);

/// "u v" per line, 1-based, in edge order.
void write_edge_list(const PeriodicGraph &g, std::ostream &out);
/// "v re im" per embedded vertex, 1-based.
void write_coordinates(const PeriodicGraph &g, std::ostream &out);
void write_dot(const PeriodicGraph &g, std::ostream &out);
/// Reads an edge list written by write_edge_list. Throws ParseError.
std::vector<GraphEdge> read_edge_list(std::istream &in);

}  // namespace hyperlat

#endif  // HYPERLAT_LATTICE_H
