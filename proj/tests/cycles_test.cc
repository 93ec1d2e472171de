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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "graph_oracles.h"
#include "hyperlat/cycles.h"
#include "hyperlat/errors.h"
#include "test_support.h"

namespace hyperlat {
namespace {

using testing::make_graph;

PeriodicGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            edges.push_back({u, v});
        }
    }
    return make_graph(n, edges);
}

PeriodicGraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
    }
    return make_graph(n, edges);
}

PeriodicGraph random_connected_graph(std::mt19937_64 &rng, int vertices, int extra) {
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (int v = 1; v < vertices; ++v) {
        int u = static_cast<int>(rng() % v);
        edges.push_back({u, v});
        seen.insert({u, v});
    }
    while (extra > 0) {
        int u = static_cast<int>(rng() % vertices), v = static_cast<int>(rng() % vertices);
        if (u == v) {
            continue;
        }
        auto key = std::minmax(u, v);
        if (seen.insert({key.first, key.second}).second) {
            edges.push_back({key.first, key.second});
            --extra;
        }
    }
    return make_graph(vertices, edges);
}

std::size_t total_weight(const std::vector<EdgeVector> &cycles) {
    std::size_t w = 0;
    for (const auto &c : cycles) {
        w += c.weight();
    }
    return w;
}

TEST(IsCycle, EvenDegreeCriterion) {
    PeriodicGraph k4 = complete_graph(4);
    // Edges sorted by (u, v): 01 02 03 12 13 23.
    EXPECT_TRUE(is_cycle(k4, EdgeVector::from_support(6, {0, 1, 3})));
    EXPECT_TRUE(is_cycle(k4, EdgeVector::from_support(6, {0, 2, 3, 5})));
    EXPECT_FALSE(is_cycle(k4, EdgeVector::from_support(6, {0, 1})));
    EXPECT_TRUE(is_cycle(k4, EdgeVector(6)));
}

TEST(SpanningTree, Counts) {
    PeriodicGraph tri = cycle_graph(3);
    EXPECT_EQ(spanning_tree(tri).size(), 2u);
    PeriodicGraph path = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    std::vector<int> tree = spanning_tree(path);
    EXPECT_EQ(tree.size(), 3u);
    EXPECT_TRUE(fundamental_cycle_basis(path, tree).empty());
    const PeriodicGraph &g = testing::instance("b8_8_n9_cyclic").lattice.graph;
    std::vector<int> t = spanning_tree(g);
    EXPECT_EQ(t.size(), 143u);
    EXPECT_EQ(g.edge_count() - static_cast<int>(t.size()), 73);
    try {
        spanning_tree(make_graph(4, {{0, 1}, {2, 3}}));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::Disconnected);
    }
}

TEST(FundamentalCycles, ValidAndFullRank) {
    PeriodicGraph tri = cycle_graph(3);
    auto basis = fundamental_cycle_basis(tri, spanning_tree(tri));
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(basis[0].weight(), 3u);

    const PeriodicGraph &g = testing::instance("b8_8_n1_trivial").lattice.graph;
    basis = fundamental_cycle_basis(g, spanning_tree(g));
    EXPECT_EQ(basis.size(), 9u);
    EXPECT_EQ(testing::dense_rank(basis), 9);
    for (const auto &c : basis) {
        EXPECT_TRUE(testing::is_even_subgraph(g, c));
    }
    std::mt19937_64 rng(41);
    for (int t = 0; t < 20; ++t) {
        PeriodicGraph r = random_connected_graph(rng, 12, 8);
        for (const auto &c : fundamental_cycle_basis(r, spanning_tree(r))) {
            EXPECT_TRUE(testing::is_even_subgraph(r, c));
        }
    }
}

TEST(MinimumCycleBasis, K4AndCycle) {
    PeriodicGraph k4 = complete_graph(4);
    auto basis = minimum_cycle_basis(k4);
    ASSERT_EQ(basis.size(), 3u);
    EXPECT_EQ(total_weight(basis), 9u);
    for (const auto &c : basis) {
        EXPECT_EQ(c.weight(), 3u);
    }
    // Brute force over every triple of K4's cycles.
    auto all = testing::cycle_space(k4);
    std::size_t best = SIZE_MAX;
    for (std::size_t a = 0; a < all.size(); ++a) {
        for (std::size_t b = a + 1; b < all.size(); ++b) {
            for (std::size_t c = b + 1; c < all.size(); ++c) {
                if (testing::dense_rank({all[a], all[b], all[c]}) == 3) {
                    best = std::min(best, all[a].weight() + all[b].weight() + all[c].weight());
                }
            }
        }
    }
    EXPECT_EQ(best, 9u);

    auto ring = minimum_cycle_basis(cycle_graph(11));
    ASSERT_EQ(ring.size(), 1u);
    EXPECT_EQ(ring[0].weight(), 11u);
}

TEST(MinimumCycleBasis, MatchesMatroidGreedyOnRandomGraphs) {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 30; ++t) {
        PeriodicGraph g = random_connected_graph(rng, 10, 1 + static_cast<int>(rng() % 8));
        auto basis = minimum_cycle_basis(g);
        EXPECT_EQ(static_cast<int>(basis.size()), g.edge_count() - g.vertex_count + 1);
        EXPECT_EQ(testing::dense_rank(basis), static_cast<int>(basis.size()));
        auto greedy = testing::greedy_extension_weights(g, {});
        std::size_t greedy_total = 0;
        for (auto w : greedy) {
            greedy_total += w;
        }
        EXPECT_EQ(total_weight(basis), greedy_total);
    }
}

TEST(MinimumCycleBasis, OpenPatchIsPlaquettes) {
    GeneratorSet gs = build_generators(BravaisSignature::from_pq(8, 8));
    UnitCell cell = build_unit_cell({8, 3}, gs);
    std::vector<Word> words{{}};
    for (int j = 1; j <= 4; ++j) {
        words.push_back({j});
        words.push_back({-j});
    }
    PeriodicGraph patch = build_open_graph(cell, gs, words);
    auto basis = minimum_cycle_basis(patch);
    ASSERT_FALSE(basis.empty());
    for (const auto &c : basis) {
        EXPECT_EQ(c.weight(), 8u);
    }
}

TEST(ShortestOddCycle, MatchesEnumeration) {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 30; ++t) {
        PeriodicGraph g = random_connected_graph(rng, 9, 2 + static_cast<int>(rng() % 6));
        auto all = testing::cycle_space(g);
        EdgeVector witness(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) {
            if (rng() & 1u) {
                witness.set(e);
            }
        }
        std::size_t best = SIZE_MAX;
        for (const auto &c : all) {
            if (c.dot(witness)) {
                best = std::min(best, c.weight());
            }
        }
        auto found = shortest_odd_cycle(g, witness);
        if (best == SIZE_MAX) {
            EXPECT_FALSE(found.has_value());
        } else {
            ASSERT_TRUE(found.has_value());
            EXPECT_EQ(found->weight(), best);
            EXPECT_TRUE(found->dot(witness));
            EXPECT_TRUE(testing::is_even_subgraph(g, *found));
            EXPECT_EQ(shortest_odd_cycle_length(g, witness), static_cast<int>(best));
        }
    }
}

class HcbInstance : public ::testing::TestWithParam<std::string> {};

// Dimension, rank, plaquette completeness, face sum and logical independence.
void check_theorem(const PeriodicGraph &g, const HyperbolicCycleBasis &hcb, int p, int genus) {
    const int dim = g.edge_count() - g.vertex_count + 1;
    const int faces_total = 2 * g.edge_count() / p;
    EXPECT_EQ(static_cast<int>(hcb.dimension()), dim);
    EXPECT_EQ(static_cast<int>(hcb.faces.size()), faces_total - 1);
    EXPECT_EQ(static_cast<int>(hcb.logicals.size()), 2 * genus);

    std::vector<EdgeVector> stored = hcb.faces;
    stored.insert(stored.end(), hcb.logicals.begin(), hcb.logicals.end());
    EXPECT_EQ(testing::dense_rank(stored), dim);

    auto faces = hcb.all_faces();
    ASSERT_EQ(static_cast<int>(faces.size()), faces_total);
    std::set<EdgeVector> distinct(faces.begin(), faces.end());
    EXPECT_EQ(static_cast<int>(distinct.size()), faces_total);
    std::vector<int> per_edge(g.edge_count(), 0);
    EdgeVector sum(g.edge_count());
    for (const auto &f : faces) {
        EXPECT_EQ(static_cast<int>(f.weight()), p);
        EXPECT_TRUE(testing::is_even_subgraph(g, f));
        for (int e : f.support()) {
            ++per_edge[e];
        }
        sum ^= f;
    }
    EXPECT_TRUE(std::all_of(per_edge.begin(), per_edge.end(), [](int c) { return c == 2; }));
    EXPECT_FALSE(sum.any());

    const int face_rank = testing::dense_rank(faces);
    EXPECT_EQ(face_rank, faces_total - 1);
    for (const auto &l : hcb.logicals) {
        EXPECT_TRUE(testing::is_even_subgraph(g, l));
        std::vector<EdgeVector> with = faces;
        with.push_back(l);
        EXPECT_EQ(testing::dense_rank(with), face_rank + 1);
    }

    // Exchanging a face for the sum of all the others keeps the span.
    std::vector<EdgeVector> exchanged = stored;
    EdgeVector others(g.edge_count());
    for (std::size_t i = 1; i < faces.size(); ++i) {
        others ^= faces[i];
    }
    exchanged[0] = others;
    EXPECT_EQ(testing::dense_rank(exchanged), dim);
}

TEST_P(HcbInstance, PrimalAndDual) {
    const auto &inst = testing::instance(GetParam());
    const Pattern pat = inst.lattice.pattern;
    const int genus = static_cast<int>(euler_genus(inst.lattice.graph));
    check_theorem(inst.lattice.graph, inst.code.hcb, pat.p, genus);
    check_theorem(inst.code.dual, inst.code.dual_hcb, pat.q, genus);
    EXPECT_NO_THROW(verify_hyperbolic_cycle_basis(inst.lattice.graph, inst.code.hcb));
    EXPECT_NO_THROW(verify_hyperbolic_cycle_basis(inst.code.dual, inst.code.dual_hcb));
}

INSTANTIATE_TEST_SUITE_P(EightThree, HcbInstance, ::testing::ValuesIn(testing::bundled_quotients(8)));
INSTANTIATE_TEST_SUITE_P(TenThree, HcbInstance, ::testing::ValuesIn(testing::bundled_quotients(10)));

TEST(Hcb, SmallestInstances) {
    const auto &one = testing::instance("b8_8_n1_trivial").code.hcb;
    EXPECT_EQ(one.faces.size(), 5u);
    EXPECT_EQ(one.logicals.size(), 4u);
    EXPECT_EQ(one.last_face.weight(), 8u);
    const auto &nine = testing::instance("b8_8_n9_cyclic").code.hcb;
    EXPECT_EQ(nine.faces.size(), 53u);
    EXPECT_EQ(nine.logicals.size(), 20u);
}

// The logicals form a minimum-weight extension of the faces; matroid greedy
// over the whole cycle space is the oracle. Feasible for E <= 40.
TEST(Hcb, LogicalsAreMinimumWeightExtension) {
    for (const char *name : {"b8_8_n1_trivial", "b10_5_n1_trivial", "b10_5_n2_cyclic"}) {
        const auto &inst = testing::instance(name);
        for (bool dual : {false, true}) {
            const PeriodicGraph &g = dual ? inst.code.dual : inst.lattice.graph;
            const HyperbolicCycleBasis &hcb = dual ? inst.code.dual_hcb : inst.code.hcb;
            ASSERT_LE(g.edge_count(), 40);
            std::vector<std::size_t> expected = testing::greedy_extension_weights(g, hcb.all_faces());
            std::vector<std::size_t> got;
            for (const auto &l : hcb.logicals) {
                got.push_back(l.weight());
            }
            std::sort(got.begin(), got.end());
            EXPECT_EQ(got, expected) << name << (dual ? " dual" : "");
        }
    }
}

TEST(Hcb, WitnessHistoryAndExport) {
    const auto &hcb = testing::instance("b8_8_n1_trivial").code.hcb;
    EXPECT_FALSE(hcb.witness_history.empty());
    std::ostringstream out;
    write_hcb(hcb, out);
    std::istringstream in(out.str());
    std::string line;
    int faces = 0, logicals = 0;
    while (std::getline(in, line)) {
        faces += line.rfind("F", 0) == 0;
        logicals += line.rfind("L", 0) == 0;
    }
    EXPECT_EQ(faces, 5);
    EXPECT_EQ(logicals, 4);
}

TEST(Hcb, OpenSubgraphDropsPbcEdges) {
    const PeriodicGraph &g = testing::instance("b8_8_n6_cyclic").lattice.graph;
    PeriodicGraph open = open_subgraph(g);
    EXPECT_EQ(open.vertex_count, g.vertex_count);
    EXPECT_EQ(open.edge_count(), static_cast<int>(std::count(g.pbc.begin(), g.pbc.end(), 0)));
}

}  // namespace
}  // namespace hyperlat
