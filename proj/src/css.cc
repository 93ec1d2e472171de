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

#include "hyperlat/css.h"

#include <ostream>
#include <sstream>

#include "hyperlat/errors.h"

namespace hyperlat {

CssCode assemble(const PeriodicGraph &gpbc, const HyperbolicCycleBasis &hcb, const HyperbolicCycleBasis &dual_hcb) {
    const int E = gpbc.edge_count();
    CssCode code;
    code.n = E;
    code.face_degree = gpbc.face_degree;
    code.vertex_degree = gpbc.vertex_degree;
    code.hz = hcb.all_faces();
    for (int v = 0; v < gpbc.vertex_count; ++v) {
        EdgeVector star(E);
        for (const auto &inc : gpbc.incident(v)) {
            star.flip(inc.edge);
        }
        code.hx.push_back(std::move(star));
    }
    code.edge_checks = gpbc.edges;
    code.z_logicals = hcb.logicals;
    code.x_logicals = dual_hcb.logicals;

    auto fail = [](const std::string &what) { throw Error(ErrorKind::InvariantViolation, what); };
    for (const auto &x : code.x_logicals) {
        if (static_cast<int>(x.size()) != E) {
            fail("dual basis is not on the same edge set");
        }
    }
    for (std::size_t i = 0; i < code.hz.size(); ++i) {
        if (static_cast<int>(code.hz[i].weight()) != code.face_degree) {
            fail("Z check " + std::to_string(i + 1) + " has weight " + std::to_string(code.hz[i].weight()));
        }
    }
    for (std::size_t i = 0; i < code.hx.size(); ++i) {
        if (static_cast<int>(code.hx[i].weight()) != code.vertex_degree) {
            fail("X check " + std::to_string(i + 1) + " has weight " + std::to_string(code.hx[i].weight()));
        }
    }
    // Checks commute iff every face meets every star evenly; a face meets
    // only the stars of its own vertices, so test those.
    for (std::size_t f = 0; f < code.hz.size(); ++f) {
        for (int e : code.hz[f].support()) {
            for (int v : {gpbc.edges[e].u, gpbc.edges[e].v}) {
                if (code.hz[f].dot(code.hx[v])) {
                    fail("Z check " + std::to_string(f + 1) + " anticommutes with X check " + std::to_string(v + 1));
                }
            }
        }
    }
    code.hz_span = EchelonBasis(E);
    for (const auto &f : code.hz) {
        code.hz_span.add(f);
    }
    const long rank_z = static_cast<long>(code.hz_span.rank());
    const long rank_x = static_cast<long>(gf2_rank(code.hx));
    code.k = static_cast<int>(E - rank_z - rank_x);
    if (rank_z != static_cast<long>(code.hz.size()) - 1 || rank_x != gpbc.vertex_count - 1) {
        fail("rank(H_Z) = " + std::to_string(rank_z) + ", rank(H_X) = " + std::to_string(rank_x) +
             "; expected F - 1 and V - 1");
    }
    if (code.k != static_cast<int>(code.z_logicals.size()) || code.k != static_cast<int>(code.x_logicals.size())) {
        fail("k = " + std::to_string(code.k) + " but the bases hold " + std::to_string(code.z_logicals.size()) + " and " +
             std::to_string(code.x_logicals.size()) + " logicals");
    }
    EchelonBasis hx_span(E);
    for (const auto &s : code.hx) {
        hx_span.add(s);
    }
    for (std::size_t i = 0; i < code.x_logicals.size(); ++i) {
        const auto &x = code.x_logicals[i];
        for (const auto &f : code.hz) {
            if (x.dot(f)) {
                fail("X logical " + std::to_string(i + 1) + " anticommutes with a Z check");
            }
        }
        if (hx_span.in_span(x)) {
            fail("X logical " + std::to_string(i + 1) + " is a product of X checks");
        }
    }
    for (std::size_t i = 0; i < code.z_logicals.size(); ++i) {
        if (code.hz_span.in_span(code.z_logicals[i])) {
            fail("Z logical " + std::to_string(i + 1) + " is a product of Z checks");
        }
    }
    std::size_t pairing_rank = gf2_rank(pairing_matrix(code.z_logicals, code.x_logicals));
    if (pairing_rank != code.z_logicals.size()) {
        throw Error(ErrorKind::PairingDegenerate, "pairing matrix has rank " + std::to_string(pairing_rank) + " of " +
                                                      std::to_string(code.z_logicals.size()));
    }
    return code;
}

std::vector<BitVector> pairing_matrix(const std::vector<EdgeVector> &z_logicals,
                                      const std::vector<EdgeVector> &x_logicals) {
    std::vector<BitVector> m;
    for (const auto &z : z_logicals) {
        BitVector row(x_logicals.size());
        for (std::size_t j = 0; j < x_logicals.size(); ++j) {
            row.set(j, z.dot(x_logicals[j]));
        }
        m.push_back(std::move(row));
    }
    return m;
}

int distance_Z(const PeriodicGraph &gpbc, const std::vector<EdgeVector> &x_logicals) {
    int best = -1;
    for (const auto &x : x_logicals) {
        int d = shortest_odd_cycle_length(gpbc, x);
        if (d >= 0 && (best < 0 || d < best)) {
            best = d;
        }
    }
    return best;
}

int distance_X(const PeriodicGraph &dual, const std::vector<EdgeVector> &z_logicals) {
    return distance_Z(dual, z_logicals);
}

void write_code(const CssCode &code, int dz, int dx, int cells, std::ostream &out) {
    std::ostringstream os;
    const int h = code.k / 2;
    os << "n k dZ dX p q N h\n";
    os << code.n << ' ' << code.k << ' ' << dz << ' ' << dx << ' ' << code.face_degree << ' ' << code.vertex_degree
       << ' ' << cells << ' ' << h << '\n';
    auto section = [&](const char *name, const std::vector<EdgeVector> &rows) {
        os << name << ' ' << rows.size() << '\n';
        for (const auto &r : rows) {
            bool first = true;
            for (int e : r.support()) {
                os << (first ? "" : " ") << e + 1;
                first = false;
            }
            os << '\n';
        }
    };
    section("HZ", code.hz);
    section("HX", code.hx);
    section("LZ", code.z_logicals);
    section("LX", code.x_logicals);
    out << os.str();
}

}  // namespace hyperlat
