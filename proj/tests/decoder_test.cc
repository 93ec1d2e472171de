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
#include <climits>
#include <deque>
#include <functional>
#include <random>
#include <set>

#include "graph_oracles.h"
#include "hyperlat/decoder.h"
#include "hyperlat/errors.h"
#include "hyperlat/matching.h"
#include "test_support.h"

namespace hyperlat {
namespace {

// Exhaustive minimum over all perfect pairings of `items`.
long brute_force_pairing(const std::vector<std::vector<int>> &dist) {
    const int n = static_cast<int>(dist.size());
    std::vector<bool> used(n, false);
    long best = LONG_MAX;
    std::function<void(long)> rec = [&](long acc) {
        int first = -1;
        for (int i = 0; i < n; ++i) {
            if (!used[i]) {
                first = i;
                break;
            }
        }
        if (first < 0) {
            best = std::min(best, acc);
            return;
        }
        used[first] = true;
        for (int j = first + 1; j < n; ++j) {
            if (!used[j]) {
                used[j] = true;
                rec(acc + dist[first][j]);
                used[j] = false;
            }
        }
        used[first] = false;
    };
    rec(0);
    return best;
}

std::vector<int> bfs_distances(const PeriodicGraph &g, int source) {
    std::vector<int> dist(g.vertex_count, -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const auto &e : g.edges) {
            int other = e.u == u ? e.v : (e.v == u ? e.u : -1);
            if (other >= 0 && dist[other] < 0) {
                dist[other] = dist[u] + 1;
                queue.push_back(other);
            }
        }
    }
    return dist;
}

// Brute-force maximum weight matching over all edge subsets.
std::pair<long, int> brute_force_max_matching(int n, const std::vector<WeightedEdge> &edges, bool max_cardinality) {
    long best_weight = LONG_MIN;
    int best_size = -1;
    const std::size_t m = edges.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<bool> used(n, false);
        long w = 0;
        int size = 0;
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            if ((mask >> i) & 1u) {
                ok = !used[edges[i].u] && !used[edges[i].v];
                used[edges[i].u] = used[edges[i].v] = true;
                w += edges[i].weight;
                ++size;
            }
        }
        if (!ok) {
            continue;
        }
        bool better = max_cardinality ? (size > best_size || (size == best_size && w > best_weight))
                                      : w > best_weight;
        if (better) {
            best_weight = w;
            best_size = size;
        }
    }
    return {best_weight, best_size};
}

TEST(MaxWeightMatching, MatchesBruteForce) {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 300; ++t) {
        const int n = 2 + static_cast<int>(rng() % 8);
        std::vector<WeightedEdge> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng() % 3 != 0 && edges.size() < 16) {
                    edges.push_back({u, v, static_cast<std::int64_t>(rng() % 20)});
                }
            }
        }
        for (bool maxcard : {false, true}) {
            std::vector<int> mate = max_weight_matching(n, edges, maxcard);
            ASSERT_EQ(static_cast<int>(mate.size()), n);
            long w = 0;
            int size = 0;
            for (const auto &e : edges) {
                if (mate[e.u] == e.v) {
                    ASSERT_EQ(mate[e.v], e.u);
                    w += e.weight;
                    ++size;
                }
            }
            for (int v = 0; v < n; ++v) {
                if (mate[v] >= 0) {
                    ASSERT_EQ(mate[mate[v]], v);
                }
            }
            auto [bw, bs] = brute_force_max_matching(n, edges, maxcard);
            EXPECT_EQ(w, bw);
            if (maxcard) {
                EXPECT_EQ(size, bs);
            }
        }
    }
}

TEST(MinWeightPerfectMatching, MatchesExhaustivePairing) {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 200; ++t) {
        const int n = 2 * (1 + static_cast<int>(rng() % 5));
        std::vector<std::vector<int>> dist(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                dist[i][j] = dist[j][i] = 1 + static_cast<int>(rng() % 15);
            }
        }
        std::vector<int> mate = min_weight_perfect_matching(dist);
        long total = 0;
        for (int i = 0; i < n; ++i) {
            ASSERT_GE(mate[i], 0);
            ASSERT_EQ(mate[mate[i]], i);
            if (i < mate[i]) {
                total += dist[i][mate[i]];
            }
        }
        EXPECT_EQ(total, brute_force_pairing(dist));
    }
}

TEST(MinWeightPerfectMatching, Errors) {
    try {
        min_weight_perfect_matching({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::OddDefectCount);
    }
    try {
        min_weight_perfect_matching({{0, 1}, {1}});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
    EXPECT_TRUE(min_weight_perfect_matching({}).empty());
}

TEST(Syndrome, BasicCases) {
    const auto &inst = testing::instance("b8_8_n9_cyclic");
    const CssCode &code = inst.code.code;
    EXPECT_TRUE(extract_syndrome(code, EdgeVector(code.n)).defects.empty());
    const GraphEdge e = inst.lattice.graph.edges[17];
    Syndrome s = extract_syndrome(code, EdgeVector::from_support(code.n, {17}));
    EXPECT_EQ(s.defects, (std::vector<int>{std::min(e.u, e.v), std::max(e.u, e.v)}));
    for (const auto &f : code.hz) {
        EXPECT_TRUE(extract_syndrome(code, f).defects.empty());
    }
}

TEST(Decode, TwoDefectsIsShortestPath) {
    const auto &inst = testing::instance("b8_8_n9_cyclic");
    const PeriodicGraph &g = inst.lattice.graph;
    std::vector<int> d0 = bfs_distances(g, 0);
    for (int target : {1, 50, 100, 143}) {
        Matching m = decode(g, {{0, target}});
        ASSERT_EQ(m.pairs.size(), 1u);
        EXPECT_EQ(m.total_weight, d0[target]);
        EXPECT_EQ(static_cast<int>(m.correction.weight()), d0[target]);
        Syndrome s = extract_syndrome(inst.code.code, m.correction);
        EXPECT_EQ(s.defects, (std::vector<int>{0, target}));
    }
}

TEST(Decode, MatchesExhaustivePairingOnRandomSyndromes) {
    const auto &inst = testing::instance("b8_8_n9_cyclic");
    const PeriodicGraph &g = inst.lattice.graph;
    std::vector<std::vector<int>> metric(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) {
        metric[v] = bfs_distances(g, v);
    }
    std::mt19937_64 rng(61);
    for (int t = 0; t < 100; ++t) {
        const int count = 2 * (1 + static_cast<int>(rng() % 5));
        std::set<int> chosen;
        while (static_cast<int>(chosen.size()) < count) {
            chosen.insert(static_cast<int>(rng() % g.vertex_count));
        }
        Syndrome s{std::vector<int>(chosen.begin(), chosen.end())};
        std::vector<std::vector<int>> dist(count, std::vector<int>(count));
        for (int i = 0; i < count; ++i) {
            for (int j = 0; j < count; ++j) {
                dist[i][j] = metric[s.defects[i]][s.defects[j]];
            }
        }
        Matching m = decode(g, s);
        EXPECT_EQ(m.total_weight, brute_force_pairing(dist));
        std::set<int> covered;
        long sum = 0;
        for (std::size_t k = 0; k < m.pairs.size(); ++k) {
            covered.insert(m.pairs[k].first);
            covered.insert(m.pairs[k].second);
            EXPECT_EQ(static_cast<int>(m.paths[k].size()), metric[m.pairs[k].first][m.pairs[k].second]);
            sum += static_cast<long>(m.paths[k].size());
        }
        EXPECT_EQ(covered, chosen);
        EXPECT_EQ(sum, m.total_weight);
        EXPECT_EQ(extract_syndrome(inst.code.code, m.correction).defects, s.defects);
    }
}

TEST(Decode, MetricIsSymmetricWithTriangleInequality) {
    const PeriodicGraph &g = testing::instance("b10_5_n9_cyclic").lattice.graph;
    std::mt19937_64 rng(67);
    for (int t = 0; t < 50; ++t) {
        int a = static_cast<int>(rng() % g.vertex_count), b = static_cast<int>(rng() % g.vertex_count),
            c = static_cast<int>(rng() % g.vertex_count);
        if (a == b || b == c || a == c) {
            continue;
        }
        long ab = decode(g, {{std::min(a, b), std::max(a, b)}}).total_weight;
        long bc = decode(g, {{std::min(b, c), std::max(b, c)}}).total_weight;
        long ac = decode(g, {{std::min(a, c), std::max(a, c)}}).total_weight;
        EXPECT_EQ(ab, bfs_distances(g, a)[b]);
        EXPECT_EQ(ab, bfs_distances(g, b)[a]);
        EXPECT_LE(ac, ab + bc);
    }
}

TEST(Decode, OddDefectCount) {
    try {
        decode(testing::instance("b8_8_n1_trivial").lattice.graph, {{0, 1, 2}});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::OddDefectCount);
    }
}

TEST(Residual, Classification) {
    const CssCode &code = testing::instance("b8_8_n6_cyclic").code.code;
    EdgeVector err = EdgeVector::from_support(code.n, {3, 40, 77});
    EXPECT_FALSE(residual_is_logical(code, err, err));
    EXPECT_FALSE(residual_is_logical(code, code.hz[5], EdgeVector(code.n)));
    EXPECT_FALSE(residual_is_logical(code, code.hz[5] ^ code.hz[9], EdgeVector(code.n)));
    for (const auto &z : code.z_logicals) {
        EXPECT_TRUE(residual_is_logical(code, z, EdgeVector(code.n)));
        EXPECT_TRUE(residual_is_logical(code, z ^ code.hz[2], EdgeVector(code.n)));
    }
    try {
        residual_is_logical(code, EdgeVector::from_support(code.n, {0}), EdgeVector(code.n));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::ResidualHasSyndrome);
    }
}

TEST(Decode, ZeroSyndromeLogicalIsAFailure) {
    const auto &inst = testing::instance("b8_8_n6_cyclic");
    const CssCode &code = inst.code.code;
    const EdgeVector &error = code.z_logicals[0];
    Syndrome s = extract_syndrome(code, error);
    EXPECT_TRUE(s.defects.empty());
    Matching m = decode(inst.lattice.graph, s);
    EXPECT_FALSE(m.correction.any());
    EXPECT_TRUE(residual_is_logical(code, error, m.correction));
}

}  // namespace
}  // namespace hyperlat
