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

#include "hyperlat/cycles.h"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "hyperlat/errors.h"

namespace hyperlat {

namespace {

// Breadth-first search in the two-sheeted lift of g. Lift node 2v + s is
// vertex v on sheet s; an edge in the witness switches sheets.
class LiftSearch {
   public:
    LiftSearch(const PeriodicGraph &g, const EdgeVector &witness)
        : g_(g), witness_(witness), dist_(2 * g.vertex_count, 0), via_(2 * g.vertex_count, -1),
          stamp_(2 * g.vertex_count, 0) {
    }

    // Length of the shortest walk from (s, 0) to (s, 1) if it is at most
    // `bound`, else -1.
    int run(int s, int bound) {
        ++epoch_;
        queue_.clear();
        const int start = 2 * s;
        const int target = 2 * s + 1;
        visit(start, 0, -1);
        std::size_t head = 0;
        while (head < queue_.size()) {
            int node = queue_[head++];
            int d = dist_[node];
            if (d + 1 > bound) {
                break;
            }
            int v = node >> 1, sheet = node & 1;
            for (const auto &inc : g_.incident(v)) {
                int next = 2 * inc.neighbor + (sheet ^ static_cast<int>(witness_.get(inc.edge)));
                if (stamp_[next] == epoch_) {
                    continue;
                }
                visit(next, d + 1, inc.edge);
                if (next == target) {
                    return d + 1;
                }
            }
        }
        return -1;
    }

    // Edge set of the walk found by the last successful run from s.
    EdgeVector walk(int s) const {
        EdgeVector c(g_.edge_count());
        int node = 2 * s + 1;
        while (node != 2 * s) {
            int e = via_[node];
            c.flip(e);
            int v = node >> 1;
            int other = g_.edges[e].u == v ? g_.edges[e].v : g_.edges[e].u;
            node = 2 * other + ((node & 1) ^ static_cast<int>(witness_.get(e)));
        }
        return c;
    }

   private:
    void visit(int node, int d, int edge) {
        stamp_[node] = epoch_;
        dist_[node] = d;
        via_[node] = edge;
        queue_.push_back(node);
    }

    const PeriodicGraph &g_;
    const EdgeVector &witness_;
    std::vector<int> dist_;
    std::vector<int> via_;
    std::vector<unsigned> stamp_;
    unsigned epoch_ = 0;
    std::vector<int> queue_;
};

std::vector<int> witness_vertices(const PeriodicGraph &g, const EdgeVector &witness) {
    std::vector<int> vs;
    for (int e : witness.support()) {
        vs.push_back(g.edges[e].u);
        vs.push_back(g.edges[e].v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

// Spanning forest by breadth-first search; returns tree edge ids sorted and
// the number of components.
std::pair<std::vector<int>, int> spanning_forest(const PeriodicGraph &g) {
    std::vector<bool> seen(g.vertex_count, false);
    std::vector<int> tree;
    int components = 0;
    std::deque<int> queue;
    for (int root = 0; root < g.vertex_count; ++root) {
        if (seen[root]) {
            continue;
        }
        ++components;
        seen[root] = true;
        queue.push_back(root);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (const auto &inc : g.incident(v)) {
                if (!seen[inc.neighbor]) {
                    seen[inc.neighbor] = true;
                    tree.push_back(inc.edge);
                    queue.push_back(inc.neighbor);
                }
            }
        }
    }
    std::sort(tree.begin(), tree.end());
    return {tree, components};
}

std::vector<EdgeVector> non_tree_units(const PeriodicGraph &g, const std::vector<int> &tree) {
    std::vector<bool> in_tree(g.edge_count(), false);
    for (int e : tree) {
        in_tree[e] = true;
    }
    std::vector<EdgeVector> units;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!in_tree[e]) {
            EdgeVector s(g.edge_count());
            s.set(e);
            units.push_back(std::move(s));
        }
    }
    return units;
}

// de Pina's witness method on a graph that may be a forest of components.
std::vector<EdgeVector> witness_mcb(const PeriodicGraph &g) {
    auto [tree, components] = spanning_forest(g);
    (void)components;
    std::vector<EdgeVector> witnesses = non_tree_units(g, tree);
    std::vector<EdgeVector> basis;
    for (std::size_t k = 0; k < witnesses.size(); ++k) {
        auto c = shortest_odd_cycle(g, witnesses[k]);
        if (!c) {
            throw Error(ErrorKind::InvariantViolation, "witness " + std::to_string(k + 1) + " has no odd cycle");
        }
        for (std::size_t i = k + 1; i < witnesses.size(); ++i) {
            if (c->dot(witnesses[i])) {
                witnesses[i] ^= witnesses[k];
            }
        }
        basis.push_back(std::move(*c));
    }
    return basis;
}

// Simple cycles of exactly `length` edges through the seed edges, found by
// depth-first search from one endpoint back to the other.
std::vector<EdgeVector> cycles_through(const PeriodicGraph &g, const std::vector<int> &seeds, int length) {
    std::vector<EdgeVector> found;
    std::unordered_set<EdgeVector, BitVectorHash> seen;
    std::vector<bool> on_path(g.vertex_count, false);
    std::vector<int> path_edges;
    for (int seed : seeds) {
        const int u = g.edges[seed].u;
        const int v = g.edges[seed].v;
        if (u == v) {
            continue;
        }
        on_path[v] = true;
        path_edges.assign(1, seed);
        // Iterative DFS: frames of (vertex, next incidence index).
        std::vector<std::pair<int, std::size_t>> stack{{v, 0}};
        while (!stack.empty()) {
            auto &[x, idx] = stack.back();
            auto inc = g.incident(x);
            if (idx >= inc.size()) {
                on_path[x] = false;
                stack.pop_back();
                path_edges.pop_back();
                continue;
            }
            auto step = inc[idx++];
            if (step.edge == seed) {
                continue;
            }
            int depth = static_cast<int>(path_edges.size());
            if (step.neighbor == u) {
                if (depth + 1 == length) {
                    EdgeVector c(g.edge_count());
                    for (int e : path_edges) {
                        c.flip(e);
                    }
                    c.flip(step.edge);
                    if (seen.insert(c).second) {
                        found.push_back(std::move(c));
                    }
                }
                continue;
            }
            if (on_path[step.neighbor] || depth + 1 >= length) {
                continue;
            }
            on_path[step.neighbor] = true;
            path_edges.push_back(step.edge);
            stack.emplace_back(step.neighbor, 0);
        }
        on_path[u] = false;
    }
    return found;
}

// Witness bookkeeping shared by the three stages of the basis construction.
class WitnessSet {
   public:
    explicit WitnessSet(std::vector<EdgeVector> witnesses) : s_(std::move(witnesses)) {
    }

    std::size_t size() const {
        return s_.size();
    }
    std::size_t consumed() const {
        return k_;
    }
    const EdgeVector &current() const {
        return s_[k_];
    }

    // Accepts c against the current witness, or against the first later
    // witness it pairs oddly with (swapped into place). Returns the index of
    // the witness used, or -1 if c depends on the cycles accepted so far.
    long accept(const EdgeVector &c) {
        std::size_t i = k_;
        while (i < s_.size() && !c.dot(s_[i])) {
            ++i;
        }
        if (i == s_.size()) {
            return -1;
        }
        std::swap(s_[k_], s_[i]);
        for (std::size_t j = k_ + 1; j < s_.size(); ++j) {
            if (c.dot(s_[j])) {
                s_[j] ^= s_[k_];
            }
        }
        ++k_;
        return static_cast<long>(i);
    }

   private:
    std::vector<EdgeVector> s_;
    std::size_t k_ = 0;
};

std::string describe(const char *stage, std::size_t slot, long witness, std::size_t weight) {
    std::ostringstream os;
    os << stage << " slot " << slot + 1 << " witness " << witness + 1 << " weight " << weight;
    if (static_cast<std::size_t>(witness) != slot) {
        os << " (swapped)";
    }
    return os.str();
}

}  // namespace

bool is_cycle(const PeriodicGraph &g, const EdgeVector &v) {
    std::vector<std::uint8_t> parity(g.vertex_count, 0);
    for (int e : v.support()) {
        parity[g.edges[e].u] ^= 1;
        parity[g.edges[e].v] ^= 1;
    }
    return std::none_of(parity.begin(), parity.end(), [](std::uint8_t x) { return x != 0; });
}

std::vector<int> spanning_tree(const PeriodicGraph &g) {
    auto [tree, components] = spanning_forest(g);
    if (components > 1) {
        throw Error(ErrorKind::Disconnected, "graph has " + std::to_string(components) + " components");
    }
    return tree;
}

std::vector<EdgeVector> fundamental_cycle_basis(const PeriodicGraph &g, const std::vector<int> &tree) {
    // Root the tree at 0 and climb from both endpoints to their meeting point.
    std::vector<int> parent(g.vertex_count, -1), parent_edge(g.vertex_count, -1), depth(g.vertex_count, -1);
    std::vector<bool> in_tree(g.edge_count(), false);
    for (int e : tree) {
        in_tree[e] = true;
    }
    std::deque<int> queue;
    for (int root = 0; root < g.vertex_count; ++root) {
        if (depth[root] >= 0) {
            continue;
        }
        depth[root] = 0;
        queue.push_back(root);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (const auto &inc : g.incident(v)) {
                if (in_tree[inc.edge] && depth[inc.neighbor] < 0) {
                    depth[inc.neighbor] = depth[v] + 1;
                    parent[inc.neighbor] = v;
                    parent_edge[inc.neighbor] = inc.edge;
                    queue.push_back(inc.neighbor);
                }
            }
        }
    }
    std::vector<EdgeVector> basis;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (in_tree[e]) {
            continue;
        }
        EdgeVector c(g.edge_count());
        c.flip(e);
        int a = g.edges[e].u, b = g.edges[e].v;
        while (a != b) {
            if (depth[a] < depth[b]) {
                std::swap(a, b);
            }
            c.flip(parent_edge[a]);
            a = parent[a];
        }
        basis.push_back(std::move(c));
    }
    return basis;
}

std::vector<EdgeVector> minimum_cycle_basis(const PeriodicGraph &g) {
    spanning_tree(g);  // connectivity check
    return witness_mcb(g);
}

std::optional<EdgeVector> shortest_odd_cycle(const PeriodicGraph &g, const EdgeVector &witness) {
    LiftSearch search(g, witness);
    int best = g.edge_count() + 1;
    std::optional<EdgeVector> result;
    for (int s : witness_vertices(g, witness)) {
        int len = search.run(s, best);
        if (len < 0) {
            continue;
        }
        EdgeVector c = search.walk(s);
        if (!result || len < best || c < *result) {
            best = len;
            result = std::move(c);
        }
    }
    return result;
}

int shortest_odd_cycle_length(const PeriodicGraph &g, const EdgeVector &witness) {
    LiftSearch search(g, witness);
    int best = -1;
    for (int s : witness_vertices(g, witness)) {
        int len = search.run(s, best < 0 ? g.edge_count() : best - 1);
        if (len >= 0) {
            best = len;
        }
    }
    return best;
}

std::vector<EdgeVector> HyperbolicCycleBasis::all_faces() const {
    std::vector<EdgeVector> all = faces;
    all.push_back(last_face);
    return all;
}

PeriodicGraph open_subgraph(const PeriodicGraph &gpbc) {
    PeriodicGraph open;
    open.vertex_count = gpbc.vertex_count;
    open.cells = gpbc.cells;
    open.sites_per_cell = gpbc.sites_per_cell;
    open.face_degree = gpbc.face_degree;
    open.vertex_degree = gpbc.vertex_degree;
    open.positions = gpbc.positions;
    for (int e = 0; e < gpbc.edge_count(); ++e) {
        if (!gpbc.pbc[e]) {
            open.edges.push_back(gpbc.edges[e]);
            open.pbc.push_back(0);
        }
    }
    open.finalize();
    return open;
}

HyperbolicCycleBasis hyperbolic_cycle_basis(const PeriodicGraph &open, const PeriodicGraph &gpbc, int face_count) {
    const int E = gpbc.edge_count();
    const int V = gpbc.vertex_count;
    const int p = gpbc.face_degree;
    if (open.vertex_count != V) {
        throw Error(ErrorKind::DimensionMismatch, "open graph and periodic graph have different vertex sets");
    }
    if (face_count < 1 || face_count > E - V + 2) {
        throw Error(ErrorKind::InvariantViolation, "face count " + std::to_string(face_count) +
                                                       " impossible for E - V + 1 = " + std::to_string(E - V + 1));
    }

    // Open edges carry their periodic-graph ids.
    std::map<std::pair<int, int>, std::vector<int>> by_ends;
    for (int e = E - 1; e >= 0; --e) {
        auto [u, v] = std::minmax(gpbc.edges[e].u, gpbc.edges[e].v);
        by_ends[{u, v}].push_back(e);
    }
    std::vector<int> open_to_pbc(open.edge_count());
    for (int e = 0; e < open.edge_count(); ++e) {
        auto [u, v] = std::minmax(open.edges[e].u, open.edges[e].v);
        auto it = by_ends.find({u, v});
        if (it == by_ends.end() || it->second.empty()) {
            throw Error(ErrorKind::InvariantViolation,
                        "open edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) + " missing from the periodic graph");
        }
        open_to_pbc[e] = it->second.back();
        it->second.pop_back();
    }
    auto lift = [&](const EdgeVector &c) {
        EdgeVector out(E);
        for (int e : c.support()) {
            out.set(open_to_pbc[e]);
        }
        return out;
    };

    // Faces of the embedding, when there is one, decide what counts as a
    // plaquette; otherwise fall back to the pairwise-overlap rule.
    std::unordered_set<EdgeVector, BitVectorHash> facial;
    const bool embedded = gpbc.has_rotation();
    if (embedded) {
        for (const auto &walk : facial_walks(gpbc)) {
            EdgeVector f(E);
            for (int d : walk) {
                f.flip(d >> 1);
            }
            if (static_cast<int>(walk.size()) == p && static_cast<int>(f.weight()) == p) {
                facial.insert(std::move(f));
            }
        }
    }

    HyperbolicCycleBasis hcb;
    WitnessSet witnesses(non_tree_units(gpbc, spanning_tree(gpbc)));
    std::unordered_set<EdgeVector, BitVectorHash> chosen;
    auto plaquette_ok = [&](const EdgeVector &c) {
        if (static_cast<int>(c.weight()) != p || chosen.count(c)) {
            return false;
        }
        if (embedded) {
            return facial.count(c) > 0;
        }
        return std::all_of(hcb.faces.begin(), hcb.faces.end(), [&](const EdgeVector &f) { return c.overlap(f) <= 1; });
    };
    auto take_face = [&](EdgeVector c, long witness, const char *stage) {
        hcb.witness_history.push_back(describe(stage, witnesses.consumed() - 1, witness, c.weight()));
        chosen.insert(c);
        hcb.faces.push_back(std::move(c));
    };

    // Initial plaquettes from the open graph.
    for (const EdgeVector &c : witness_mcb(open)) {
        if (static_cast<int>(hcb.faces.size()) >= face_count - 1) {
            break;
        }
        EdgeVector lifted = lift(c);
        if (!plaquette_ok(lifted)) {
            continue;
        }
        long w = witnesses.accept(lifted);
        if (w >= 0) {
            take_face(std::move(lifted), w, "initial");
        }
    }

    // Plaquettes closed by the periodic boundary.
    if (static_cast<int>(hcb.faces.size()) < face_count - 1) {
        std::vector<int> seeds;
        for (int e = 0; e < E; ++e) {
            if (gpbc.pbc[e]) {
                seeds.push_back(e);
            }
        }
        // Seeding at pbc edges misses plaquettes that lie in the open graph
        // but were not among its minimum cycles; widen to all edges then.
        std::vector<EdgeVector> candidates = cycles_through(gpbc, seeds, p);
        bool widened = false;
        auto widen = [&] {
            std::vector<int> all(E);
            std::iota(all.begin(), all.end(), 0);
            candidates = cycles_through(gpbc, all, p);
            widened = true;
        };
        if (static_cast<int>(candidates.size()) < face_count - 1 - static_cast<int>(hcb.faces.size())) {
            widen();
        }
        std::vector<bool> used(candidates.size(), false);
        while (static_cast<int>(hcb.faces.size()) < face_count - 1) {
            const std::size_t slot = witnesses.consumed();
            long pick = -1;
            for (std::size_t i = 0; i < candidates.size() && pick < 0; ++i) {
                if (!used[i] && candidates[i].dot(witnesses.current()) && plaquette_ok(candidates[i])) {
                    pick = static_cast<long>(i);
                }
            }
            long w = -1;
            if (pick >= 0) {
                w = witnesses.accept(candidates[pick]);
            } else {
                for (std::size_t i = 0; i < candidates.size() && w < 0; ++i) {
                    if (!used[i] && plaquette_ok(candidates[i])) {
                        w = witnesses.accept(candidates[i]);
                        if (w >= 0) {
                            pick = static_cast<long>(i);
                        } else {
                            used[i] = true;
                        }
                    }
                }
            }
            if (pick < 0 && !widened) {
                widen();
                used.assign(candidates.size(), false);
                continue;
            }
            if (pick < 0) {
                throw Error(ErrorKind::BasisIncomplete, "no independent plaquette for slot " + std::to_string(slot + 1) +
                                                            " after exhausting " + std::to_string(candidates.size()) +
                                                            " candidate " + std::to_string(p) + "-cycles");
            }
            used[pick] = true;
            take_face(candidates[pick], w, "plaquette");
        }
    }

    // Non-contractible cycles.
    while (witnesses.consumed() < witnesses.size()) {
        const std::size_t slot = witnesses.consumed();
        auto c = shortest_odd_cycle(gpbc, witnesses.current());
        if (!c) {
            throw Error(ErrorKind::BasisIncomplete, "no cycle odd against witness of slot " + std::to_string(slot + 1));
        }
        long w = witnesses.accept(*c);
        hcb.witness_history.push_back(describe("logical", slot, w, c->weight()));
        hcb.logicals.push_back(std::move(*c));
    }

    hcb.last_face = EdgeVector(E);
    for (const auto &f : hcb.faces) {
        hcb.last_face ^= f;
    }
    if (embedded && !facial.count(hcb.last_face)) {
        throw Error(ErrorKind::InvariantViolation, "sum of the stored plaquettes is not a face of the embedding");
    }
    verify_hyperbolic_cycle_basis(gpbc, hcb);
    return hcb;
}

void verify_hyperbolic_cycle_basis(const PeriodicGraph &gpbc, const HyperbolicCycleBasis &hcb) {
    const int E = gpbc.edge_count();
    const std::size_t dim = static_cast<std::size_t>(E - gpbc.vertex_count + 1);
    auto fail = [](const std::string &what) { throw Error(ErrorKind::InvariantViolation, what); };
    if (hcb.dimension() != dim) {
        fail("basis has " + std::to_string(hcb.dimension()) + " elements, E - V + 1 = " + std::to_string(dim));
    }
    std::vector<EdgeVector> faces = hcb.all_faces();
    std::vector<int> per_edge(E, 0);
    EdgeVector total(E);
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (static_cast<int>(faces[i].weight()) != gpbc.face_degree || !is_cycle(gpbc, faces[i])) {
            fail("face " + std::to_string(i + 1) + " is not a " + std::to_string(gpbc.face_degree) + "-cycle");
        }
        for (int e : faces[i].support()) {
            ++per_edge[e];
        }
        total ^= faces[i];
    }
    for (int e = 0; e < E; ++e) {
        if (per_edge[e] != 2) {
            fail("edge " + std::to_string(e + 1) + " lies in " + std::to_string(per_edge[e]) + " faces");
        }
    }
    if (total.any()) {
        fail("faces do not sum to zero");
    }
    EchelonBasis span(E);
    for (const auto &f : hcb.faces) {
        span.add(f);
    }
    if (span.rank() != hcb.faces.size()) {
        fail("stored faces are dependent");
    }
    for (std::size_t i = 0; i < hcb.logicals.size(); ++i) {
        if (!is_cycle(gpbc, hcb.logicals[i])) {
            fail("logical " + std::to_string(i + 1) + " is not a cycle");
        }
        if (span.in_span(hcb.logicals[i])) {
            fail("logical " + std::to_string(i + 1) + " is a sum of faces");
        }
    }
    for (const auto &l : hcb.logicals) {
        span.add(l);
    }
    if (span.rank() != dim) {
        fail("basis rank " + std::to_string(span.rank()) + " below E - V + 1 = " + std::to_string(dim));
    }
}

void write_hcb(const HyperbolicCycleBasis &hcb, std::ostream &out) {
    std::ostringstream os;
    auto line = [&](char tag, const EdgeVector &v) {
        os << tag;
        for (int e : v.support()) {
            os << ' ' << e + 1;
        }
        os << '\n';
    };
    for (const auto &f : hcb.faces) {
        line('F', f);
    }
    for (const auto &l : hcb.logicals) {
        line('L', l);
    }
    out << os.str();
}

}  // namespace hyperlat
