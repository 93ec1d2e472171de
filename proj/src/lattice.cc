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

#include "hyperlat/lattice.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <map>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

#include "hyperlat/errors.h"

namespace hyperlat {

namespace {

constexpr double kDedupTol = 1e-7;
constexpr double kNeighborRelTol = 1e-6;
constexpr int kFaceDepthBudget = 10;
constexpr int kMaxLinkLength = 6;

// Spatial hash over disk points with a fixed merge tolerance.
class PointIndex {
   public:
    explicit PointIndex(double tol) : tol_(tol), cell_(tol * 64.0) {
    }

    int find(Complex z) const {
        auto [ix, iy] = cell_of(z);
        for (long dx = -1; dx <= 1; ++dx) {
            for (long dy = -1; dy <= 1; ++dy) {
                auto it = buckets_.find(key(ix + dx, iy + dy));
                if (it == buckets_.end()) {
                    continue;
                }
                for (int idx : it->second) {
                    if (std::abs(points_[idx] - z) < tol_) {
                        return idx;
                    }
                }
            }
        }
        return -1;
    }

    // Returns {index, inserted}.
    std::pair<int, bool> insert(Complex z) {
        int found = find(z);
        if (found >= 0) {
            return {found, false};
        }
        auto [ix, iy] = cell_of(z);
        int idx = static_cast<int>(points_.size());
        points_.push_back(z);
        buckets_[key(ix, iy)].push_back(idx);
        return {idx, true};
    }

    const std::vector<Complex> &points() const {
        return points_;
    }

   private:
    std::pair<long, long> cell_of(Complex z) const {
        return {static_cast<long>(std::floor(z.real() / cell_)), static_cast<long>(std::floor(z.imag() / cell_))};
    }
    static std::uint64_t key(long ix, long iy) {
        return (static_cast<std::uint64_t>(ix) << 32) ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(iy));
    }

    double tol_;
    double cell_;
    std::vector<Complex> points_;
    std::unordered_map<std::uint64_t, std::vector<int>> buckets_;
};

double dist(Complex a, Complex b) {
    return hyperbolic_distance(DiskPoint(a), DiskPoint(b));
}

// Group elements can have large entries after long words; compare relative
// to their size.
bool same_element(const MobiusTransform &g, const MobiusTransform &h) {
    double scale = std::max(1.0, std::abs(g.a()));
    return g.distance_to(h) <= 1e-8 * scale;
}

struct Tessellation {
    std::vector<Complex> vertices;
    double vertex_radius = 0.0;  // vertices are complete within this distance of 0
};

// Faces are generated breadth-first from the central polygon through the
// half-turns about its edge midpoints.
Tessellation generate_tessellation(const Pattern &pattern, double phase, double radius) {
    RegularPolygon poly = regular_polygon(pattern.p, pattern.q, phase);
    const double circum = hyperbolic_distance(DiskPoint(), poly.vertices[0]);
    const double rho = poly.inradius();
    std::vector<MobiusTransform> half_turns;
    for (int k = 0; k < pattern.p; ++k) {
        Complex mid = poly.vertices[k].z() + poly.vertices[(k + 1) % pattern.p].z();
        MobiusTransform t = MobiusTransform::rotation(std::arg(mid)) * MobiusTransform::boost(rho);
        half_turns.push_back(t * MobiusTransform::rotation(std::numbers::pi) * t.inverse());
    }

    const double face_limit = radius + 2.0 * circum + 2.0 * rho;
    PointIndex centers(kDedupTol);
    PointIndex vertices(kDedupTol);
    std::vector<MobiusTransform> frontier{MobiusTransform::identity()};
    centers.insert(Complex(0.0, 0.0));
    int depth = 0;
    while (!frontier.empty()) {
        if (depth > kFaceDepthBudget) {
            throw Error(ErrorKind::CoverageFailure, "face generation exceeded depth budget " +
                                                        std::to_string(kFaceDepthBudget) + " before covering radius " +
                                                        std::to_string(radius));
        }
        std::vector<MobiusTransform> next;
        for (const auto &g : frontier) {
            for (const auto &v : poly.vertices) {
                vertices.insert(g.apply(v.z()));
            }
            for (const auto &h : half_turns) {
                MobiusTransform f = g * h;
                Complex c = f.apply(Complex(0.0, 0.0));
                if (std::norm(c) >= 1.0 || dist(Complex(0.0, 0.0), c) > face_limit) {
                    continue;
                }
                if (centers.insert(c).second) {
                    next.push_back(f);
                }
            }
        }
        frontier = std::move(next);
        ++depth;
    }
    Tessellation t;
    t.vertices = vertices.points();
    t.vertex_radius = radius + circum;
    return t;
}

// True if every generator maps tessellation vertices onto tessellation vertices.
bool tessellation_invariant(const Tessellation &t, const GeneratorSet &gs) {
    PointIndex index(1e-6);
    for (Complex z : t.vertices) {
        index.insert(z);
    }
    const double inner = t.vertex_radius - 0.25;
    int checked = 0;
    for (const auto &g : gs.generators) {
        for (Complex z : t.vertices) {
            if (dist(Complex(0.0, 0.0), z) > inner) {
                continue;
            }
            Complex w = g.apply(z);
            if (std::norm(w) >= 1.0 || dist(Complex(0.0, 0.0), w) > inner) {
                continue;
            }
            ++checked;
            if (index.find(w) < 0) {
                return false;
            }
        }
    }
    return checked > 0;
}

double normalized_angle(Complex z) {
    double a = std::arg(z);
    if (a < -1e-9) {
        a += 2.0 * std::numbers::pi;
    }
    return std::max(a, 0.0);
}

// Direction of the geodesic from `from` towards `to`, measured at `from`.
double direction_at(Complex from, Complex to) {
    MobiusTransform m = MobiusTransform::to_origin(DiskPoint(from));
    return std::arg(m.apply(to));
}

bool at_edge_length(double d, double ell) {
    return std::abs(d - ell) <= kNeighborRelTol * ell;
}

}  // namespace

const AdjacencyMatrix &UnitCell::inter(int signed_generator) const {
    int j = std::abs(signed_generator);
    if (signed_generator == 0 || j > bravais.generator_count()) {
        throw Error(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(signed_generator));
    }
    return links[2 * (j - 1) + (signed_generator < 0 ? 1 : 0)].adjacency;
}

UnitCell build_unit_cell(const Pattern &pattern, const GeneratorSet &gs, int max_link_length) {
    const BravaisSignature &sig = gs.signature;
    PredictedCounts per_cell = predicted_counts(pattern, sig, 1);

    UnitCell cell;
    cell.pattern = pattern;
    cell.bravais = sig;

    RegularPolygon bravais_poly = fundamental_polygon(sig);
    const double bravais_circum = hyperbolic_distance(DiskPoint(), bravais_poly.vertices[0]);

    // The {p,q} tessellation shares the Bravais mirror through the real axis,
    // so only two phases are possible.
    Tessellation tess;
    bool aligned = false;
    for (double phase : {std::numbers::pi / pattern.p, 0.0}) {
        tess = generate_tessellation(pattern, phase, bravais_circum);
        if (tessellation_invariant(tess, gs)) {
            cell.phase = phase;
            aligned = true;
            break;
        }
    }
    if (!aligned) {
        throw Error(ErrorKind::CoverageFailure, "no polygon phase makes the tessellation invariant under the generators");
    }

    // Dirichlet domain of the origin, boundary included.
    std::vector<MobiusTransform> neighbors;
    for (const auto &g : gs.generators) {
        neighbors.push_back(g);
        neighbors.push_back(g.inverse());
    }
    const Complex origin(0.0, 0.0);
    PointIndex candidates(kDedupTol);
    for (Complex z : tess.vertices) {
        double d0 = dist(origin, z);
        if (d0 > bravais_circum + kGeometricTol) {
            continue;
        }
        bool inside = true;
        for (const auto &g : neighbors) {
            if (d0 > dist(g.apply(origin), z) + kGeometricTol) {
                inside = false;
                break;
            }
        }
        if (inside) {
            candidates.insert(z);
        }
    }

    // Boundary vertices identified by a side pairing collapse to one site.
    const auto &cand = candidates.points();
    std::vector<int> parent(cand.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t i = 0; i < cand.size(); ++i) {
        for (const auto &g : neighbors) {
            int j = candidates.find(g.apply(cand[i]));
            if (j >= 0) {
                parent[find(static_cast<int>(i))] = find(j);
            }
        }
    }
    auto before = [](Complex a, Complex b) {
        double ra = std::abs(a), rb = std::abs(b);
        if (std::abs(ra - rb) > kGeometricTol) {
            return ra < rb;
        }
        return normalized_angle(a) < normalized_angle(b);
    };
    std::map<int, Complex> representative;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        int root = find(static_cast<int>(i));
        auto it = representative.find(root);
        if (it == representative.end() || before(cand[i], it->second)) {
            representative[root] = cand[i];
        }
    }
    std::vector<Complex> sites;
    for (const auto &[root, z] : representative) {
        sites.push_back(z);
    }
    std::sort(sites.begin(), sites.end(), before);
    if (static_cast<long>(sites.size()) != per_cell.vertices) {
        throw Error(ErrorKind::CoverageFailure, "found " + std::to_string(sites.size()) +
                                                    " sites in the fundamental domain, expected " +
                                                    std::to_string(per_cell.vertices));
    }
    for (Complex z : sites) {
        cell.sites.emplace_back(z);
    }
    const int ns = static_cast<int>(sites.size());

    RegularPolygon central = regular_polygon(pattern.p, pattern.q, cell.phase);
    cell.edge_length = central.edge_length();
    const double ell = cell.edge_length;

    cell.intra.assign(ns, std::vector<std::uint8_t>(ns, 0));
    for (int u = 0; u < ns; ++u) {
        for (int v = 0; v < ns; ++v) {
            if (u != v && at_edge_length(dist(sites[u], sites[v]), ell)) {
                cell.intra[u][v] = 1;
            }
        }
    }

    // Reduced words, deduplicated as group elements by their orbit point of
    // the origin (the translation group acts freely). Generator links are
    // always kept; longer words only when they carry edges. The word length
    // grows past max_link_length until the edge count is complete.
    std::vector<int> letters;
    for (int j = 1; j <= sig.generator_count(); ++j) {
        letters.push_back(j);
        letters.push_back(-j);
    }
    const double reach = 2.0 * bravais_circum + ell + kGeometricTol;
    PointIndex seen(1e-9);
    seen.insert(origin);
    std::vector<std::pair<Word, MobiusTransform>> frontier{{Word{}, MobiusTransform::identity()}};
    long edge_entries = 0;  // directed (u, link, v) entries over all kept links
    for (int u = 0; u < ns; ++u) {
        for (int v = 0; v < ns; ++v) {
            edge_entries += cell.intra[u][v];
        }
    }
    for (int length = 1; length <= kMaxLinkLength && !frontier.empty(); ++length) {
        if (length > max_link_length && edge_entries >= 2 * per_cell.edges) {
            break;
        }
        std::vector<std::pair<Word, MobiusTransform>> next;
        for (const auto &[w, g] : frontier) {
            for (int letter : letters) {
                if (!w.empty() && w.back() == -letter) {
                    continue;
                }
                MobiusTransform element = g * (letter > 0 ? gs.generators[letter - 1]
                                                          : gs.generators[-letter - 1].inverse());
                Complex image = element.apply(origin);
                if (!seen.insert(image).second) {
                    continue;
                }
                Word ext = w;
                ext.push_back(letter);
                CellLink link;
                link.word = ext;
                link.element = element;
                link.adjacency.assign(ns, std::vector<std::uint8_t>(ns, 0));
                long entries = 0;
                if (dist(origin, image) <= reach) {
                    for (int u = 0; u < ns; ++u) {
                        for (int v = 0; v < ns; ++v) {
                            if (at_edge_length(dist(sites[u], element.apply(sites[v])), ell)) {
                                link.adjacency[u][v] = 1;
                                ++entries;
                            }
                        }
                    }
                }
                if (length == 1 || entries > 0) {
                    edge_entries += entries;
                    cell.links.push_back(std::move(link));
                }
                next.emplace_back(std::move(ext), element);
            }
        }
        frontier = std::move(next);
    }
    for (std::size_t a = 0; a < cell.links.size(); ++a) {
        MobiusTransform inv = cell.links[a].element.inverse();
        for (std::size_t b = 0; b < cell.links.size(); ++b) {
            if (same_element(inv, cell.links[b].element)) {
                cell.links[a].inverse = static_cast<int>(b);
                break;
            }
        }
    }

    for (int u = 0; u < ns; ++u) {
        for (int v = u + 1; v < ns; ++v) {
            if (cell.intra[u][v]) {
                cell.slots.push_back({u, -1, v});
            }
        }
    }
    for (std::size_t a = 0; a < cell.links.size(); ++a) {
        const CellLink &link = cell.links[a];
        bool has_edges = false;
        for (const auto &row : link.adjacency) {
            has_edges = has_edges || std::any_of(row.begin(), row.end(), [](std::uint8_t x) { return x != 0; });
        }
        if (!has_edges) {
            continue;
        }
        if (link.inverse < 0) {
            throw Error(ErrorKind::CoverageFailure, "link word without its inverse among the links");
        }
        if (static_cast<int>(a) > link.inverse) {
            continue;
        }
        for (int u = 0; u < ns; ++u) {
            for (int v = 0; v < ns; ++v) {
                // A self-inverse pairing would list each edge twice.
                if (link.adjacency[u][v] && !(static_cast<int>(a) == link.inverse && u > v)) {
                    cell.slots.push_back({u, static_cast<int>(a), v});
                }
            }
        }
    }
    if (static_cast<long>(cell.slots.size()) != per_cell.edges) {
        throw Error(ErrorKind::CoverageFailure, "unit cell carries " + std::to_string(cell.slots.size()) +
                                                    " edge orbits, expected " + std::to_string(per_cell.edges));
    }
    return cell;
}

void PeriodicGraph::finalize() {
    offsets_.assign(vertex_count + 1, 0);
    for (const auto &e : edges) {
        ++offsets_[e.u + 1];
        if (e.v != e.u) {
            ++offsets_[e.v + 1];
        } else {
            ++offsets_[e.u + 1];
        }
    }
    for (int v = 0; v < vertex_count; ++v) {
        offsets_[v + 1] += offsets_[v];
    }
    incidence_.assign(offsets_[vertex_count], {0, 0});
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (int i = 0; i < edge_count(); ++i) {
        const auto &e = edges[i];
        incidence_[fill[e.u]++] = {e.v, i};
        incidence_[fill[e.v]++] = {e.u, i};
    }
    if (pbc.size() != edges.size()) {
        pbc.resize(edges.size(), 0);
    }
}

bool PeriodicGraph::connected() const {
    if (vertex_count == 0) {
        return true;
    }
    std::vector<bool> seen(vertex_count, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto &inc : incident(v)) {
            if (!seen[inc.neighbor]) {
                seen[inc.neighbor] = true;
                ++count;
                stack.push_back(inc.neighbor);
            }
        }
    }
    return count == vertex_count;
}

namespace {

struct RawEdge {
    int a;
    int b;
    double angle_a;
    double angle_b;
    std::uint8_t pbc;
};

// Sorts edges by endpoint pair, builds the graph and its rotation system.
PeriodicGraph assemble_graph(int vertex_count, std::vector<RawEdge> raw) {
    for (auto &r : raw) {
        if (r.a > r.b) {
            std::swap(r.a, r.b);
            std::swap(r.angle_a, r.angle_b);
        }
    }
    std::stable_sort(raw.begin(), raw.end(), [](const RawEdge &x, const RawEdge &y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    PeriodicGraph g;
    g.vertex_count = vertex_count;
    std::vector<std::vector<std::pair<double, int>>> darts(vertex_count);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        g.edges.push_back({raw[i].a, raw[i].b});
        g.pbc.push_back(raw[i].pbc);
        darts[raw[i].a].emplace_back(raw[i].angle_a, static_cast<int>(2 * i));
        darts[raw[i].b].emplace_back(raw[i].angle_b, static_cast<int>(2 * i + 1));
    }
    g.rotation.resize(vertex_count);
    for (int v = 0; v < vertex_count; ++v) {
        std::sort(darts[v].begin(), darts[v].end());
        for (const auto &[angle, d] : darts[v]) {
            g.rotation[v].push_back(d);
        }
    }
    g.finalize();
    return g;
}

double slot_angle_from(const UnitCell &cell, const EdgeSlot &s) {
    Complex target = cell.sites[s.to_site].z();
    if (s.link >= 0) {
        target = cell.links[s.link].element.apply(target);
    }
    return direction_at(cell.sites[s.from_site].z(), target);
}

double slot_angle_to(const UnitCell &cell, const EdgeSlot &s) {
    Complex target = cell.sites[s.from_site].z();
    if (s.link >= 0) {
        target = cell.links[s.link].element.inverse().apply(target);
    }
    return direction_at(cell.sites[s.to_site].z(), target);
}

}  // namespace

PeriodicGraph build_open_graph(const UnitCell &cell, const GeneratorSet &gs, const std::vector<Word> &words) {
    if (words.empty() || !words.front().empty()) {
        throw Error(ErrorKind::ConfigInvalid, "open graph words must start with the empty word");
    }
    const int ns = static_cast<int>(cell.sites.size());
    const int k = static_cast<int>(words.size());
    std::vector<MobiusTransform> elements;
    for (const Word &w : words) {
        elements.push_back(gs.evaluate(w));
    }
    std::vector<RawEdge> raw;
    for (int c = 0; c < k; ++c) {
        for (const EdgeSlot &s : cell.slots) {
            int target = c;
            if (s.link >= 0) {
                MobiusTransform t = elements[c] * cell.links[s.link].element;
                target = -1;
                for (int d = 0; d < k; ++d) {
                    if (same_element(t, elements[d])) {
                        target = d;
                        break;
                    }
                }
                if (target < 0) {
                    continue;
                }
            }
            raw.push_back({c * ns + s.from_site, target * ns + s.to_site, slot_angle_from(cell, s),
                           slot_angle_to(cell, s), 0});
        }
    }
    PeriodicGraph g = assemble_graph(k * ns, std::move(raw));
    g.cells = k;
    g.sites_per_cell = ns;
    g.face_degree = cell.pattern.p;
    g.vertex_degree = cell.pattern.q;
    for (int c = 0; c < k; ++c) {
        for (int s = 0; s < ns; ++s) {
            g.positions.push_back(elements[c].apply(cell.sites[s]));
        }
    }
    return g;
}

PeriodicGraph build_periodic_graph(const UnitCell &cell, const GeneratorSet &gs, const QuotientSpec &spec) {
    const int ns = static_cast<int>(cell.sites.size());
    const int n = spec.index;
    std::vector<Permutation> actions = generator_actions(spec, gs);
    auto inverses = actions;
    for (auto &p : inverses) {
        p = inverse_permutation(p);
    }
    std::vector<Permutation> link_perms;
    for (const CellLink &link : cell.links) {
        Permutation acc = identity_permutation(n);
        for (int letter : link.word) {
            int idx = std::abs(letter) - 1;
            acc = then(acc, letter > 0 ? actions[idx] : inverses[idx]);
        }
        link_perms.push_back(std::move(acc));
    }
    std::vector<Word> words = transversal_words(spec);
    std::vector<MobiusTransform> transversal;
    for (const Word &w : words) {
        transversal.push_back(gs.evaluate(w));
    }

    std::vector<RawEdge> raw;
    for (int c = 0; c < n; ++c) {
        for (const EdgeSlot &s : cell.slots) {
            int target = c;
            std::uint8_t is_pbc = 0;
            if (s.link >= 0) {
                target = link_perms[s.link][c];
                is_pbc = same_element(transversal[c] * cell.links[s.link].element, transversal[target]) ? 0 : 1;
            }
            raw.push_back({c * ns + s.from_site, target * ns + s.to_site, slot_angle_from(cell, s),
                           slot_angle_to(cell, s), is_pbc});
        }
    }
    PeriodicGraph g = assemble_graph(n * ns, std::move(raw));
    g.cells = n;
    g.sites_per_cell = ns;
    g.face_degree = cell.pattern.p;
    g.vertex_degree = cell.pattern.q;
    for (int c = 0; c < n; ++c) {
        for (int s = 0; s < ns; ++s) {
            g.positions.push_back(transversal[c].apply(cell.sites[s]));
        }
    }

    std::vector<int> bad;
    for (int v = 0; v < g.vertex_count; ++v) {
        if (g.degree(v) != cell.pattern.q) {
            bad.push_back(v);
        }
    }
    if (!bad.empty()) {
        std::ostringstream os;
        os << bad.size() << " vertices without degree " << cell.pattern.q << ":";
        for (std::size_t i = 0; i < bad.size() && i < 10; ++i) {
            os << " " << bad[i] + 1 << "(deg " << g.degree(bad[i]) << ")";
        }
        throw Error(ErrorKind::DegreeViolation, os.str());
    }
    long e = g.edge_count();
    if (2 * e % cell.pattern.p != 0 || 2 * e != static_cast<long>(cell.pattern.q) * g.vertex_count) {
        throw Error(ErrorKind::InvariantViolation, "pF = 2E = qV fails");
    }
    if (!g.connected()) {
        throw Error(ErrorKind::InvariantViolation, "periodic graph is disconnected");
    }
    if (euler_genus(g) != cover_genus(spec)) {
        throw Error(ErrorKind::InvariantViolation, "Euler genus " + std::to_string(euler_genus(g)) +
                                                       " differs from Riemann-Hurwitz genus " +
                                                       std::to_string(cover_genus(spec)));
    }
    return g;
}

PredictedCounts predicted_counts(const Pattern &pattern, const BravaisSignature &bravais, int index) {
    if (!is_hyperbolic_pattern(pattern.p, pattern.q)) {
        polygon_radius(pattern.p, pattern.q);  // throws NonHyperbolicPattern
    }
    if (index < 1) {
        throw Error(ErrorKind::NonIntegerCount, "index must be positive");
    }
    const long p = pattern.p, q = pattern.q;
    PredictedCounts c;
    c.genus = static_cast<long>(index) * (bravais.genus - 1) + 1;
    long num = 4 * q * (c.genus - 1);
    long den = p * q - 2 * q - 2 * p;
    auto fail = [&](const char *what) {
        std::ostringstream os;
        os << what << " is not an integer for {" << p << "," << q << "} with genus " << c.genus;
        throw Error(ErrorKind::NonIntegerCount, os.str());
    };
    if (num % den != 0) {
        fail("F");
    }
    c.faces = num / den;
    if ((p * c.faces) % 2 != 0) {
        fail("E");
    }
    c.edges = p * c.faces / 2;
    if ((p * c.faces) % q != 0) {
        fail("V");
    }
    c.vertices = p * c.faces / q;
    c.n = c.edges;
    c.k = 2 * c.genus;
    return c;
}

long euler_genus(const PeriodicGraph &g) {
    long faces = g.face_count_hint();
    long chi = faces - g.edge_count() + g.vertex_count;
    return (2 - chi) / 2;
}

std::vector<std::vector<int>> facial_walks(const PeriodicGraph &g) {
    if (!g.has_rotation()) {
        throw Error(ErrorKind::InvariantViolation, "graph has no rotation system");
    }
    const int darts = 2 * g.edge_count();
    std::vector<int> next_ccw(darts, -1);
    for (const auto &rot : g.rotation) {
        for (std::size_t i = 0; i < rot.size(); ++i) {
            next_ccw[rot[i]] = rot[(i + 1) % rot.size()];
        }
    }
    std::vector<bool> used(darts, false);
    std::vector<std::vector<int>> walks;
    for (int start = 0; start < darts; ++start) {
        if (used[start]) {
            continue;
        }
        std::vector<int> walk;
        int d = start;
        while (!used[d]) {
            used[d] = true;
            walk.push_back(d);
            d = next_ccw[d ^ 1];
        }
        walks.push_back(std::move(walk));
    }
    return walks;
}

std::vector<EdgeVector> faces_from_embedding(const PeriodicGraph &g) {
    std::vector<EdgeVector> faces;
    for (const auto &walk : facial_walks(g)) {
        EdgeVector f(g.edge_count());
        for (int d : walk) {
            f.flip(d >> 1);
        }
        faces.push_back(std::move(f));
    }
    return faces;
}

PeriodicGraph dual_graph(const PeriodicGraph &g, const std::vector<EdgeVector> &faces) {
    const int e_count = g.edge_count();
    std::vector<std::vector<int>> owners(e_count);
    for (std::size_t f = 0; f < faces.size(); ++f) {
        if (static_cast<int>(faces[f].size()) != e_count) {
            throw Error(ErrorKind::DimensionMismatch, "face vector length differs from edge count");
        }
        for (int e : faces[f].support()) {
            owners[e].push_back(static_cast<int>(f));
        }
    }
    for (int e = 0; e < e_count; ++e) {
        if (owners[e].size() != 2) {
            throw Error(ErrorKind::NotTwoManifold, "edge " + std::to_string(e + 1) + " lies in " +
                                                       std::to_string(owners[e].size()) + " faces");
        }
    }
    PeriodicGraph d;
    d.vertex_count = static_cast<int>(faces.size());
    d.face_degree = g.vertex_degree;
    d.vertex_degree = g.face_degree;
    d.cells = g.cells;
    d.pbc = g.pbc;
    for (int e = 0; e < e_count; ++e) {
        d.edges.push_back({std::min(owners[e][0], owners[e][1]), std::max(owners[e][0], owners[e][1])});
    }
    d.finalize();

    // Dual rotation at face f follows the face's own walk order, which makes
    // the dual facial walks the primal vertex stars.
    if (g.has_rotation()) {
        std::unordered_map<EdgeVector, int, BitVectorHash> face_index;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            face_index.emplace(faces[f], static_cast<int>(f));
        }
        std::vector<std::vector<int>> rotation(faces.size());
        bool complete = true;
        for (const auto &walk : facial_walks(g)) {
            EdgeVector ev(e_count);
            for (int dart : walk) {
                ev.flip(dart >> 1);
            }
            auto it = face_index.find(ev);
            if (it == face_index.end() || static_cast<int>(walk.size()) != static_cast<int>(ev.weight())) {
                complete = false;
                break;
            }
            int f = it->second;
            for (int dart : walk) {
                int e = dart >> 1;
                int side = (d.edges[e].u == f) ? 0 : 1;
                rotation[f].push_back(2 * e + side);
            }
        }
        if (complete) {
            for (const auto &r : rotation) {
                complete = complete && !r.empty();
            }
        }
        if (complete) {
            d.rotation = std::move(rotation);
        }
    }
    return d;
}

void write_edge_list(const PeriodicGraph &g, std::ostream &out) {
    for (const auto &e : g.edges) {
        out << e.u + 1 << ' ' << e.v + 1 << '\n';
    }
}

void write_coordinates(const PeriodicGraph &g, std::ostream &out) {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t v = 0; v < g.positions.size(); ++v) {
        os << v + 1 << ' ' << g.positions[v].re() << ' ' << g.positions[v].im() << '\n';
    }
    out << os.str();
}

void write_dot(const PeriodicGraph &g, std::ostream &out) {
    std::ostringstream os;
    os.precision(9);
    os << "graph lattice {\n  node [shape=point];\n";
    for (std::size_t v = 0; v < g.positions.size(); ++v) {
        os << "  " << v + 1 << " [pos=\"" << 10.0 * g.positions[v].re() << ',' << 10.0 * g.positions[v].im()
           << "!\"];\n";
    }
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        os << "  " << g.edges[i].u + 1 << " -- " << g.edges[i].v + 1;
        if (i < g.pbc.size() && g.pbc[i]) {
            os << " [style=dashed]";
        }
        os << ";\n";
    }
    os << "}\n";
    out << os.str();
}

std::vector<GraphEdge> read_edge_list(std::istream &in) {
    std::vector<GraphEdge> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        std::istringstream ls(line);
        long u = 0, v = 0;
        std::string rest;
        if (!(ls >> u >> v) || (ls >> rest) || u < 1 || v < 1) {
            throw Error(ErrorKind::ParseError, "bad edge list line " + std::to_string(lineno) + ": '" + line + "'");
        }
        edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
    }
    return edges;
}

}  // namespace hyperlat
