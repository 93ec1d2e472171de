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

#include "hyperlat/pipeline.h"

#include <sstream>

#include "hyperlat/errors.h"

namespace hyperlat {

LatticeBuild build_lattice(const Pattern &pattern, const QuotientSpec &quotient) {
    LatticeBuild b;
    b.pattern = pattern;
    b.quotient = quotient;
    b.predicted = predicted_counts(pattern, quotient.signature, quotient.index);
    b.generators = build_generators(quotient.signature);
    b.cell = build_unit_cell(pattern, b.generators);
    b.graph = build_periodic_graph(b.cell, b.generators, quotient);
    const PeriodicGraph &g = b.graph;
    if (g.vertex_count != b.predicted.vertices || g.edge_count() != b.predicted.edges ||
        g.face_count_hint() != b.predicted.faces || euler_genus(g) != b.predicted.genus) {
        std::ostringstream os;
        os << "built V/E/F/h = " << g.vertex_count << '/' << g.edge_count() << '/' << g.face_count_hint() << '/'
           << euler_genus(g) << ", predicted " << b.predicted.vertices << '/' << b.predicted.edges << '/'
           << b.predicted.faces << '/' << b.predicted.genus;
        throw Error(ErrorKind::InvariantViolation, os.str());
    }
    return b;
}

CodeBuild build_code(const LatticeBuild &lattice) {
    CodeBuild c;
    const PeriodicGraph &g = lattice.graph;
    c.open = open_subgraph(g);
    c.hcb = hyperbolic_cycle_basis(c.open, g, g.face_count_hint());
    c.dual = dual_graph(g, c.hcb.all_faces());
    c.dual_hcb = hyperbolic_cycle_basis(open_subgraph(c.dual), c.dual, c.dual.face_count_hint());
    c.code = assemble(g, c.hcb, c.dual_hcb);
    if (c.code.k != 2 * lattice.predicted.genus) {
        throw Error(ErrorKind::InvariantViolation, "k = " + std::to_string(c.code.k) + ", expected 2h = " +
                                                       std::to_string(2 * lattice.predicted.genus));
    }
    return c;
}

}  // namespace hyperlat
