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

#include "hyperlat/fuchsian.h"

#include <cmath>
#include <deque>
#include <fstream>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>

#include "hyperlat/errors.h"
#include "json.hpp"

namespace hyperlat {

BravaisSignature BravaisSignature::for_family(BravaisFamily family, int genus) {
    if (genus < 2) {
        throw Error(ErrorKind::ConfigInvalid, "Bravais genus must be at least 2");
    }
    BravaisSignature sig;
    sig.genus = genus;
    sig.family = family;
    if (family == BravaisFamily::FourG) {
        sig.p_b = 4 * genus;
        sig.q_b = 4 * genus;
    } else {
        sig.p_b = 2 * (2 * genus + 1);
        sig.q_b = 2 * genus + 1;
    }
    return sig;
}

BravaisSignature BravaisSignature::from_pq(int p_b, int q_b) {
    if (p_b == q_b && p_b % 4 == 0 && p_b >= 8) {
        return for_family(BravaisFamily::FourG, p_b / 4);
    }
    if (p_b == 2 * q_b && q_b % 2 == 1 && q_b >= 5) {
        return for_family(BravaisFamily::TwoTimesOddG, (q_b - 1) / 2);
    }
    std::ostringstream os;
    os << "{" << p_b << "," << q_b << "} is neither a {4g,4g} nor a {2(2g+1),2g+1} Bravais lattice";
    throw Error(ErrorKind::ConfigInvalid, os.str());
}

BravaisSignature::CellCounts BravaisSignature::minimal_counts() const {
    if (family == BravaisFamily::FourG) {
        return {1, 2 * genus, 1};
    }
    return {1, 2 * genus + 1, 2};
}

Word relator_word(int genus) {
    Word w;
    for (int j = 1; j <= 2 * genus; ++j) {
        w.push_back(j % 2 == 1 ? j : -j);
    }
    for (int j = 1; j <= 2 * genus; ++j) {
        w.push_back(j % 2 == 1 ? -j : j);
    }
    return w;
}

MobiusTransform GeneratorSet::evaluate(const Word &word) const {
    MobiusTransform m;
    for (int letter : word) {
        int idx = std::abs(letter) - 1;
        if (letter == 0 || idx >= static_cast<int>(generators.size())) {
            throw Error(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(letter));
        }
        m = m * (letter > 0 ? generators[idx] : generators[idx].inverse());
    }
    return m;
}

RegularPolygon fundamental_polygon(const BravaisSignature &sig) {
    return regular_polygon(sig.p_b, sig.q_b);
}

namespace {

// Vertex j of the fundamental polygon, at angle (j + 1/2) * 2 pi / p_B.
// Edge e joins vertices e-1 and e; its midpoint lies at angle e * 2 pi / p_B.
DiskPoint polygon_vertex(const BravaisSignature &sig, int j) {
    int p = sig.p_b;
    j = ((j % p) + p) % p;
    double alpha = 2.0 * std::numbers::pi / p;
    return DiskPoint(std::polar(polygon_radius(sig.p_b, sig.q_b), (j + 0.5) * alpha));
}

struct EdgeMap {
    int source_edge;
    int target_edge;
};

EdgeMap pairing_of(const BravaisSignature &sig, int m) {
    int half = sig.p_b / 2;
    return {m - 1 + half, m - 1};
}

// Shortest word over the independent generators equal to `target`,
// scanning letters +1, -1, +2, -2, ... in order.
Word find_word(const GeneratorSet &gs, const MobiusTransform &target, int max_length) {
    int n = gs.independent_count;
    std::vector<int> letters;
    for (int j = 1; j <= n; ++j) {
        letters.push_back(j);
        letters.push_back(-j);
    }
    Word current;
    std::function<bool(const MobiusTransform &, int)> extend = [&](const MobiusTransform &acc, int remaining) {
        if (remaining == 0) {
            return acc.approx_equal(target);
        }
        for (int letter : letters) {
            if (!current.empty() && current.back() == -letter) {
                continue;
            }
            int idx = std::abs(letter) - 1;
            current.push_back(letter);
            MobiusTransform next = acc * (letter > 0 ? gs.generators[idx] : gs.generators[idx].inverse());
            if (extend(next, remaining - 1)) {
                return true;
            }
            current.pop_back();
        }
        return false;
    };
    for (int length = 1; length <= max_length; ++length) {
        current.clear();
        if (extend(MobiusTransform::identity(), length)) {
            return current;
        }
    }
    return {};
}

}  // namespace

GeneratorSet build_generators(const BravaisSignature &sig) {
    GeneratorSet gs;
    gs.signature = sig;
    gs.independent_count = sig.independent_count();

    EdgeMap e = pairing_of(sig, 1);
    // Orientation-reversing along the boundary: the start of the source edge
    // lands on the end of the target edge.
    MobiusTransform gamma1 = isometry_from_point_pairs(polygon_vertex(sig, e.source_edge - 1),
                                                       polygon_vertex(sig, e.source_edge),
                                                       polygon_vertex(sig, e.target_edge),
                                                       polygon_vertex(sig, e.target_edge - 1));
    double alpha = 2.0 * std::numbers::pi / sig.p_b;
    for (int m = 1; m <= sig.generator_count(); ++m) {
        MobiusTransform r = MobiusTransform::rotation((m - 1) * alpha);
        gs.generators.push_back(r * gamma1 * r.inverse());
    }

    double residual = check_relator(gs);
    if (residual > kGeometricTol) {
        std::ostringstream os;
        os << "relator residual " << residual << " for {" << sig.p_b << "," << sig.q_b << "}";
        throw Error(ErrorKind::RelatorViolation, os.str());
    }
    for (int m = gs.independent_count + 1; m <= sig.generator_count(); ++m) {
        Word w = find_word(gs, gs.generators[m - 1], 2 * gs.independent_count);
        if (w.empty()) {
            throw Error(ErrorKind::RelatorViolation,
                        "generator " + std::to_string(m) + " is not a short word in the independent generators");
        }
        gs.dependent_words.push_back(std::move(w));
    }
    return gs;
}

double check_relator(const std::vector<MobiusTransform> &independent, int genus) {
    MobiusTransform m;
    for (int letter : relator_word(genus)) {
        const MobiusTransform &g = independent.at(std::abs(letter) - 1);
        m = m * (letter > 0 ? g : g.inverse());
    }
    return m.distance_to(MobiusTransform::identity());
}

double check_relator(const GeneratorSet &gs) {
    return check_relator(gs.generators, gs.signature.genus);
}

SidePairingReport check_side_pairings(const GeneratorSet &gs) {
    const BravaisSignature &sig = gs.signature;
    int p = sig.p_b;
    SidePairingReport report;
    std::vector<int> parent(p);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto wrap = [p](int j) { return ((j % p) + p) % p; };

    for (int m = 1; m <= sig.generator_count(); ++m) {
        EdgeMap e = pairing_of(sig, m);
        const MobiusTransform &g = gs.generators[m - 1];
        int s0 = wrap(e.source_edge - 1), s1 = wrap(e.source_edge);
        int t0 = wrap(e.target_edge), t1 = wrap(e.target_edge - 1);
        double err0 = std::abs(g.apply(polygon_vertex(sig, s0).z()) - polygon_vertex(sig, t0).z());
        double err1 = std::abs(g.apply(polygon_vertex(sig, s1).z()) - polygon_vertex(sig, t1).z());
        report.max_endpoint_error = std::max({report.max_endpoint_error, err0, err1});
        parent[find(s0)] = find(t0);
        parent[find(s1)] = find(t1);
    }
    std::vector<double> sums(p, 0.0);
    std::vector<bool> used(p, false);
    for (int j = 0; j < p; ++j) {
        double angle = interior_angle(polygon_vertex(sig, j - 1), polygon_vertex(sig, j), polygon_vertex(sig, j + 1));
        sums[find(j)] += angle;
        used[find(j)] = true;
    }
    for (int j = 0; j < p; ++j) {
        if (used[j]) {
            report.vertex_class_angle_sums.push_back(sums[j]);
        }
    }
    return report;
}

Permutation identity_permutation(int n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation inverse_permutation(const Permutation &perm) {
    Permutation inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        inv[perm[i]] = static_cast<int>(i);
    }
    return inv;
}

Permutation then(const Permutation &first, const Permutation &second) {
    Permutation out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        out[i] = second[first[i]];
    }
    return out;
}

namespace {

Permutation evaluate_word(const std::vector<Permutation> &perms, const std::vector<Permutation> &inverses, int n,
                          const Word &word) {
    Permutation acc = identity_permutation(n);
    for (int letter : word) {
        int idx = std::abs(letter) - 1;
        if (letter == 0 || idx >= static_cast<int>(perms.size())) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "generator index " + std::to_string(letter) + " outside 1.." + std::to_string(perms.size()));
        }
        acc = then(acc, letter > 0 ? perms[idx] : inverses[idx]);
    }
    return acc;
}

std::vector<Permutation> inverses_of(const std::vector<Permutation> &perms) {
    std::vector<Permutation> inv;
    inv.reserve(perms.size());
    for (const auto &p : perms) {
        inv.push_back(inverse_permutation(p));
    }
    return inv;
}

// Breadth-first tree from coset 0; returns parent letter per coset (0 for root)
// and discovery order. Letters are tried +1, -1, +2, -2, ...
struct CosetTree {
    std::vector<int> order;
    std::vector<int> parent;
    std::vector<int> letter;
};

CosetTree coset_tree(const std::vector<Permutation> &perms, const std::vector<Permutation> &inverses, int n) {
    CosetTree tree;
    tree.parent.assign(n, -1);
    tree.letter.assign(n, 0);
    std::vector<bool> seen(n, false);
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        tree.order.push_back(c);
        for (std::size_t j = 0; j < perms.size(); ++j) {
            for (int sign : {1, -1}) {
                int next = sign > 0 ? perms[j][c] : inverses[j][c];
                if (!seen[next]) {
                    seen[next] = true;
                    tree.parent[next] = c;
                    tree.letter[next] = sign * static_cast<int>(j + 1);
                    queue.push_back(next);
                }
            }
        }
    }
    return tree;
}

}  // namespace

void validate_quotient(const QuotientSpec &spec) {
    const int n = spec.index;
    const int gens = spec.signature.independent_count();
    if (n < 1) {
        throw Error(ErrorKind::ParseError, "index must be at least 1");
    }
    if (static_cast<int>(spec.perms.size()) != gens) {
        throw Error(ErrorKind::ParseError, "expected " + std::to_string(gens) + " generator permutations, got " +
                                               std::to_string(spec.perms.size()));
    }
    for (int j = 0; j < gens; ++j) {
        const Permutation &p = spec.perms[j];
        if (static_cast<int>(p.size()) != n) {
            throw Error(ErrorKind::ParseError, "permutation of generator " + std::to_string(j + 1) + " has length " +
                                                   std::to_string(p.size()) + ", expected " + std::to_string(n));
        }
        std::vector<bool> hit(n, false);
        for (int image : p) {
            if (image < 0 || image >= n || hit[image]) {
                throw Error(ErrorKind::ParseError,
                            "generator " + std::to_string(j + 1) + " does not define a permutation of 1.." +
                                std::to_string(n));
            }
            hit[image] = true;
        }
    }

    std::vector<Permutation> inverses = inverses_of(spec.perms);
    Permutation rel = evaluate_word(spec.perms, inverses, n, relator_word(spec.signature.genus));
    for (int i = 0; i < n; ++i) {
        if (rel[i] != i) {
            throw Error(ErrorKind::RelatorNotIdentity, "relator maps coset " + std::to_string(i + 1) + " to " +
                                                           std::to_string(rel[i] + 1));
        }
    }

    CosetTree tree = coset_tree(spec.perms, inverses, n);
    if (static_cast<int>(tree.order.size()) != n) {
        throw Error(ErrorKind::NotTransitive, "orbit of coset 1 has size " + std::to_string(tree.order.size()) +
                                                  " out of " + std::to_string(n));
    }

    // The point stabilizer is generated by the Schreier generators
    // t_i s t_{i s}^-1; the action is regular iff they are all trivial.
    std::vector<Permutation> reps(n);
    reps[0] = identity_permutation(n);
    for (std::size_t k = 1; k < tree.order.size(); ++k) {
        int c = tree.order[k];
        int letter = tree.letter[c];
        int idx = std::abs(letter) - 1;
        reps[c] = then(reps[tree.parent[c]], letter > 0 ? spec.perms[idx] : inverses[idx]);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < gens; ++j) {
            Permutation moved = then(reps[i], spec.perms[j]);
            if (moved != reps[spec.perms[j][i]]) {
                throw Error(ErrorKind::NotRegular, "generated group is larger than the index " + std::to_string(n) +
                                                       " (nontrivial stabilizer element from coset " +
                                                       std::to_string(i + 1) + ", generator " +
                                                       std::to_string(j + 1) + ")");
            }
        }
    }
}

QuotientSpec parse_quotient(const std::string &json_text) {
    QuotientSpec spec;
    try {
        nlohmann::json doc = nlohmann::json::parse(json_text);
        const auto &bravais = doc.at("bravais");
        int p = bravais.at("p").get<int>();
        int q = bravais.at("q").get<int>();
        int genus = bravais.at("genus").get<int>();
        spec.signature = BravaisSignature::from_pq(p, q);
        if (spec.signature.genus != genus) {
            throw Error(ErrorKind::ParseError, "genus " + std::to_string(genus) + " does not match {" +
                                                   std::to_string(p) + "," + std::to_string(q) + "}");
        }
        spec.index = doc.at("index").get<int>();
        for (const auto &arr : doc.at("generators")) {
            Permutation perm;
            for (const auto &v : arr) {
                perm.push_back(v.get<int>() - 1);
            }
            spec.perms.push_back(std::move(perm));
        }
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::ParseError, e.what());
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::ConfigInvalid) {
            throw Error(ErrorKind::ParseError, e.detail());
        }
        throw;
    }
    validate_quotient(spec);
    return spec;
}

QuotientSpec load_quotient(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open quotient file " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_quotient(buf.str());
}

std::string quotient_to_json(const QuotientSpec &spec) {
    std::ostringstream os;
    os << "{\"bravais\": {\"p\": " << spec.signature.p_b << ", \"q\": " << spec.signature.q_b
       << ", \"genus\": " << spec.signature.genus << "},\n \"index\": " << spec.index << ",\n \"generators\": [";
    for (std::size_t j = 0; j < spec.perms.size(); ++j) {
        os << (j ? ",\n  [" : "\n  [");
        for (std::size_t i = 0; i < spec.perms[j].size(); ++i) {
            os << (i ? "," : "") << spec.perms[j][i] + 1;
        }
        os << "]";
    }
    os << "]}\n";
    return os.str();
}

Permutation coset_action(const QuotientSpec &spec, const Word &word) {
    return evaluate_word(spec.perms, inverses_of(spec.perms), spec.index, word);
}

std::vector<Permutation> generator_actions(const QuotientSpec &spec, const GeneratorSet &gs) {
    if (!(spec.signature == gs.signature)) {
        throw Error(ErrorKind::SignatureMismatch, "quotient and generator set belong to different Bravais lattices");
    }
    std::vector<Permutation> out = spec.perms;
    for (const Word &w : gs.dependent_words) {
        out.push_back(coset_action(spec, w));
    }
    return out;
}

std::vector<Word> transversal_words(const QuotientSpec &spec) {
    std::vector<Permutation> inverses = inverses_of(spec.perms);
    CosetTree tree = coset_tree(spec.perms, inverses, spec.index);
    std::vector<Word> words(spec.index);
    for (std::size_t k = 1; k < tree.order.size(); ++k) {
        int c = tree.order[k];
        words[c] = words[tree.parent[c]];
        words[c].push_back(tree.letter[c]);
    }
    return words;
}

QuotientSpec intersect_quotients(const QuotientSpec &q1, const QuotientSpec &q2) {
    if (!(q1.signature == q2.signature)) {
        throw Error(ErrorKind::SignatureMismatch, "cannot intersect quotients of different Bravais lattices");
    }
    const int gens = q1.signature.independent_count();
    const long n2 = q2.index;
    auto key = [n2](int a, int b) { return static_cast<long>(a) * n2 + b; };
    std::vector<int> id(static_cast<std::size_t>(q1.index) * n2, -1);
    std::vector<std::pair<int, int>> states{{0, 0}};
    id[key(0, 0)] = 0;
    std::vector<std::vector<int>> images(gens);
    for (std::size_t s = 0; s < states.size(); ++s) {
        auto [a, b] = states[s];
        for (int j = 0; j < gens; ++j) {
            int na = q1.perms[j][a];
            int nb = q2.perms[j][b];
            long k = key(na, nb);
            if (id[k] < 0) {
                id[k] = static_cast<int>(states.size());
                states.emplace_back(na, nb);
            }
            images[j].push_back(id[k]);
        }
    }
    QuotientSpec out;
    out.signature = q1.signature;
    out.index = static_cast<int>(states.size());
    out.perms = std::move(images);
    validate_quotient(out);
    return out;
}

QuotientSpec cyclic_quotient(const BravaisSignature &sig, int n, const std::vector<int> &exponents) {
    QuotientSpec spec;
    spec.signature = sig;
    spec.index = n;
    for (int e : exponents) {
        Permutation p(n);
        for (int i = 0; i < n; ++i) {
            p[i] = static_cast<int>(((i + static_cast<long>(e)) % n + n) % n);
        }
        spec.perms.push_back(std::move(p));
    }
    validate_quotient(spec);
    return spec;
}

int cover_genus(const QuotientSpec &spec) {
    return spec.index * (spec.signature.genus - 1) + 1;
}

}  // namespace hyperlat
