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

#include "hyperlat/decoder.h"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "hyperlat/errors.h"
#include "hyperlat/matching.h"

namespace hyperlat {

namespace {

// Breadth-first distances and parent edges from one source.
struct Tree {
    std::vector<int> dist;
    std::vector<int> via;
};

Tree bfs(const PeriodicGraph &g, int source) {
    Tree t{std::vector<int>(g.vertex_count, -1), std::vector<int>(g.vertex_count, -1)};
    std::vector<int> queue{source};
    t.dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (const auto &inc : g.incident(v)) {
            if (t.dist[inc.neighbor] < 0) {
                t.dist[inc.neighbor] = t.dist[v] + 1;
                t.via[inc.neighbor] = inc.edge;
                queue.push_back(inc.neighbor);
            }
        }
    }
    return t;
}

}  // namespace

Syndrome extract_syndrome(const CssCode &code, const EdgeVector &error) {
    if (static_cast<int>(error.size()) != code.n) {
        throw Error(ErrorKind::DimensionMismatch, "error length " + std::to_string(error.size()) + " differs from n");
    }
    std::vector<std::uint8_t> parity(code.hx.size(), 0);
    for (int e : error.support()) {
        parity[code.edge_checks[e].u] ^= 1;
        parity[code.edge_checks[e].v] ^= 1;
    }
    Syndrome s;
    for (std::size_t v = 0; v < parity.size(); ++v) {
        if (parity[v]) {
            s.defects.push_back(static_cast<int>(v));
        }
    }
    return s;
}

Matching decode(const PeriodicGraph &gpbc, const Syndrome &s) {
    const int d = static_cast<int>(s.defects.size());
    if (d % 2 != 0) {
        throw Error(ErrorKind::OddDefectCount, std::to_string(d) + " defects");
    }
    std::vector<Tree> trees;
    trees.reserve(d);
    for (int v : s.defects) {
        trees.push_back(bfs(gpbc, v));
    }
    std::vector<std::vector<int>> dist(d, std::vector<int>(d, 0));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            int x = trees[i].dist[s.defects[j]];
            if (x < 0) {
                throw Error(ErrorKind::Disconnected, "defects in different components");
            }
            dist[i][j] = x;
        }
    }
    std::vector<int> mate = min_weight_perfect_matching(dist);

    Matching m;
    m.correction = EdgeVector(gpbc.edge_count());
    for (int i = 0; i < d; ++i) {
        int j = mate[i];
        if (j < i) {
            continue;
        }
        std::vector<int> path;
        int v = s.defects[j];
        while (v != s.defects[i]) {
            int e = trees[i].via[v];
            path.push_back(e);
            m.correction.flip(e);
            v = gpbc.edges[e].u == v ? gpbc.edges[e].v : gpbc.edges[e].u;
        }
        m.total_weight += dist[i][j];
        m.pairs.emplace_back(std::min(s.defects[i], s.defects[j]), std::max(s.defects[i], s.defects[j]));
        m.paths.push_back(std::move(path));
    }
    return m;
}

bool residual_is_logical(const CssCode &code, const EdgeVector &error, const EdgeVector &correction) {
    EdgeVector residual = error ^ correction;
    if (!extract_syndrome(code, residual).defects.empty()) {
        throw Error(ErrorKind::ResidualHasSyndrome, "error + correction is not a cycle");
    }
    bool by_parity = std::any_of(code.x_logicals.begin(), code.x_logicals.end(),
                                 [&](const EdgeVector &x) { return residual.dot(x); });
    bool by_span = !code.hz_span.in_span(residual);
    if (by_parity != by_span) {
        throw Error(ErrorKind::InvariantViolation, "logical parity and stabilizer span disagree on a residual");
    }
    return by_parity;
}

void write_decode_dump(const Syndrome &s, const Matching &m, std::ostream &out) {
    std::ostringstream os;
    os << "defects";
    for (int v : s.defects) {
        os << ' ' << v + 1;
    }
    os << "\nweight " << m.total_weight << '\n';
    for (std::size_t i = 0; i < m.pairs.size(); ++i) {
        os << "pair " << m.pairs[i].first + 1 << ' ' << m.pairs[i].second + 1 << " path";
        for (int e : m.paths[i]) {
            os << ' ' << e + 1;
        }
        os << '\n';
    }
    out << os.str();
}

}  // namespace hyperlat
