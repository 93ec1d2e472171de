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

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include "hyperlat/errors.h"
#include "hyperlat/fuchsian.h"
#include "test_support.h"

namespace hyperlat {
namespace {

using std::numbers::pi;
using Mat = std::array<Complex, 4>;

// Plain 2x2 complex matrices, independent of MobiusTransform.
Mat matrix_of(const MobiusTransform &g) {
    return {g.a(), g.b(), std::conj(g.b()), std::conj(g.a())};
}
Mat multiply(const Mat &x, const Mat &y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}
Mat inverse_su11(const Mat &x) {
    return {x[3], -x[1], -x[2], x[0]};
}
double relator_residual(const std::vector<Mat> &gens, const Word &word) {
    Mat acc{1.0, 0.0, 0.0, 1.0};
    for (int letter : word) {
        const Mat &g = gens[std::abs(letter) - 1];
        acc = multiply(acc, letter > 0 ? g : inverse_su11(g));
    }
    double plus = 0.0, minus = 0.0;
    const Mat id{1.0, 0.0, 0.0, 1.0};
    for (int i = 0; i < 4; ++i) {
        plus = std::max(plus, std::abs(acc[i] - id[i]));
        minus = std::max(minus, std::abs(acc[i] + id[i]));
    }
    return std::min(plus, minus);
}

// Order of the permutation group generated by `gens`, by closure.
std::size_t group_order(const std::vector<Permutation> &gens) {
    const int n = static_cast<int>(gens[0].size());
    std::set<Permutation> seen{identity_permutation(n)};
    std::vector<Permutation> frontier{identity_permutation(n)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto &g : frontier) {
            for (const auto &s : gens) {
                Permutation h(n);
                for (int i = 0; i < n; ++i) {
                    h[i] = s[g[i]];
                }
                if (seen.insert(h).second) {
                    next.push_back(h);
                }
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

TEST(BravaisSignature, Families) {
    BravaisSignature four = BravaisSignature::for_family(BravaisFamily::FourG, 2);
    EXPECT_EQ(four.p_b, 8);
    EXPECT_EQ(four.q_b, 8);
    EXPECT_EQ(four.minimal_counts().faces, 1);
    EXPECT_EQ(four.minimal_counts().edges, 4);
    EXPECT_EQ(four.minimal_counts().vertices, 1);
    BravaisSignature odd = BravaisSignature::for_family(BravaisFamily::TwoTimesOddG, 2);
    EXPECT_EQ(odd.p_b, 10);
    EXPECT_EQ(odd.q_b, 5);
    EXPECT_EQ(odd.minimal_counts().edges, 5);
    EXPECT_EQ(odd.minimal_counts().vertices, 2);
    EXPECT_EQ(BravaisSignature::from_pq(12, 12).genus, 3);
    EXPECT_EQ(BravaisSignature::from_pq(14, 7).genus, 3);
    EXPECT_THROW(BravaisSignature::from_pq(8, 3), Error);
}

TEST(Generators, RelatorHoldsByExplicitMatrixProducts) {
    for (auto [pb, qb] : {std::pair{8, 8}, {10, 5}, {12, 12}, {14, 7}}) {
        BravaisSignature sig = BravaisSignature::from_pq(pb, qb);
        GeneratorSet gs = build_generators(sig);
        EXPECT_EQ(static_cast<int>(gs.generators.size()), pb / 2);
        EXPECT_EQ(gs.independent_count, 2 * sig.genus);
        std::vector<Mat> mats;
        for (const auto &g : gs.generators) {
            mats.push_back(matrix_of(g));
        }
        EXPECT_LT(relator_residual(mats, relator_word(sig.genus)), 1e-9) << pb << "," << qb;
        EXPECT_LT(check_relator(gs), 1e-9);
    }
}

TEST(Generators, RotationConjugatesAndEqualTranslationLength) {
    for (auto [pb, qb] : {std::pair{8, 8}, {10, 5}}) {
        GeneratorSet gs = build_generators(BravaisSignature::from_pq(pb, qb));
        const double alpha = 2 * pi / pb;
        for (std::size_t m = 0; m < gs.generators.size(); ++m) {
            MobiusTransform expected = MobiusTransform::rotation(m * alpha) * gs.generators[0] *
                                       MobiusTransform::rotation(-(m * alpha));
            EXPECT_TRUE(gs.generators[m].approx_equal(expected, 1e-9));
            EXPECT_EQ(classify(gs.generators[m]), IsometryClass::Hyperbolic);
            EXPECT_NEAR(gs.generators[m].trace_magnitude(), gs.generators[0].trace_magnitude(), 1e-9);
        }
    }
}

TEST(Generators, DependentGeneratorWordEvaluates) {
    GeneratorSet gs = build_generators(BravaisSignature::from_pq(10, 5));
    ASSERT_EQ(gs.dependent_words.size(), 1u);
    EXPECT_TRUE(gs.evaluate(gs.dependent_words[0]).approx_equal(gs.generators[4], 1e-9));
}

TEST(Relator, IdentitySubstitutionAndSensitivity) {
    std::vector<MobiusTransform> ids(4);
    EXPECT_EQ(check_relator(ids, 2), 0.0);
    std::vector<Mat> id_mats(4, Mat{1.0, 0.0, 0.0, 1.0});
    EXPECT_EQ(relator_residual(id_mats, relator_word(2)), 0.0);

    GeneratorSet gs = build_generators(BravaisSignature::from_pq(8, 8));
    std::vector<MobiusTransform> perturbed(gs.generators.begin(), gs.generators.begin() + 4);
    perturbed[1] = MobiusTransform(perturbed[1].a() + 1e-3, perturbed[1].b());
    EXPECT_GT(check_relator(perturbed, 2), 1e-4);
}

TEST(SidePairings, EndpointsAndAngleSums) {
    for (auto [pb, qb] : {std::pair{8, 8}, {10, 5}}) {
        SidePairingReport report = check_side_pairings(build_generators(BravaisSignature::from_pq(pb, qb)));
        EXPECT_LT(report.max_endpoint_error, 1e-9);
        ASSERT_FALSE(report.vertex_class_angle_sums.empty());
        for (double sum : report.vertex_class_angle_sums) {
            EXPECT_NEAR(sum, 2 * pi, 1e-9);
        }
    }
}

TEST(Quotient, TrivialSpec) {
    QuotientSpec spec = load_quotient(testing::quotient_path("b8_8_n1_trivial"));
    EXPECT_EQ(spec.index, 1);
    EXPECT_EQ(cover_genus(spec), 2);
}

TEST(Quotient, CyclicNineAcceptedWithExplicitRelatorCheck) {
    BravaisSignature sig = BravaisSignature::from_pq(8, 8);
    QuotientSpec spec = cyclic_quotient(sig, 9, {1, 2, 3, 4});
    Permutation acc = identity_permutation(9);
    for (int letter : relator_word(2)) {
        const Permutation &g = spec.perms[std::abs(letter) - 1];
        acc = then(acc, letter > 0 ? g : inverse_permutation(g));
    }
    EXPECT_EQ(acc, identity_permutation(9));
    EXPECT_NO_THROW(parse_quotient(quotient_to_json(spec)));
}

TEST(Quotient, ValidationErrors) {
    auto kind_of = [](const std::string &text) {
        try {
            parse_quotient(text);
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::ConfigInvalid;
    };
    const std::string head = R"({"bravais":{"p":8,"q":8,"genus":2},)";
    EXPECT_EQ(kind_of("not json"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of(head + R"("index":2,"generators":[[1,2],[1,2],[1,2]]})"), ErrorKind::ParseError);
    EXPECT_EQ(kind_of(head + R"("index":2,"generators":[[1,1],[1,2],[1,2],[1,2]]})"), ErrorKind::ParseError);
    // Relator [1,-2,3,-4,-1,2,-3,4] under a non-abelian S3 image.
    EXPECT_EQ(kind_of(head + R"("index":3,"generators":[[2,1,3],[1,3,2],[1,2,3],[1,2,3]]})"),
              ErrorKind::RelatorNotIdentity);
    EXPECT_EQ(kind_of(head + R"("index":2,"generators":[[1,2],[1,2],[1,2],[1,2]]})"), ErrorKind::NotTransitive);
    // Cyclic group of order 3 acting on 4 points: transitive fails first, so
    // use S3 acting on 3 points, which is transitive but not regular.
    EXPECT_EQ(kind_of(head + R"("index":3,"generators":[[2,1,3],[2,1,3],[2,3,1],[2,3,1]]})"),
              ErrorKind::NotRegular);
    EXPECT_EQ(kind_of(R"({"bravais":{"p":8,"q":3,"genus":2},"index":1,"generators":[[1],[1],[1],[1]]})"),
              ErrorKind::ParseError);
}

TEST(Quotient, BundledSpecsAreRegularByGroupClosure) {
    for (int pb : {8, 10}) {
        for (const auto &name : testing::bundled_quotients(pb)) {
            QuotientSpec spec = load_quotient(testing::quotient_path(name));
            EXPECT_EQ(spec.signature.p_b, pb);
            EXPECT_EQ(group_order(spec.perms), static_cast<std::size_t>(spec.index)) << name;
            EXPECT_EQ(coset_action(spec, relator_word(2)), identity_permutation(spec.index)) << name;
            EXPECT_EQ(cover_genus(spec), spec.index + 1);
        }
    }
}

TEST(CosetAction, WordIdentities) {
    QuotientSpec spec = load_quotient(testing::quotient_path("b8_8_n24_s4"));
    EXPECT_EQ(coset_action(spec, {}), identity_permutation(24));
    for (int j = 1; j <= 4; ++j) {
        EXPECT_EQ(coset_action(spec, {j, -j}), identity_permutation(24));
        EXPECT_EQ(coset_action(spec, {-j, j}), identity_permutation(24));
    }
    EXPECT_THROW(coset_action(spec, {5}), Error);
}

TEST(Transversal, WordsReachEveryCosetOnce) {
    QuotientSpec spec = load_quotient(testing::quotient_path("b10_5_n60_a5"));
    std::vector<Word> words = transversal_words(spec);
    ASSERT_EQ(words.size(), 60u);
    EXPECT_TRUE(words[0].empty());
    for (int i = 0; i < 60; ++i) {
        EXPECT_EQ(coset_action(spec, words[i])[0], i);
    }
}

TEST(Intersection, KnownIndices) {
    BravaisSignature sig = BravaisSignature::from_pq(8, 8);
    QuotientSpec trivial = load_quotient(testing::quotient_path("b8_8_n1_trivial"));
    QuotientSpec s4 = load_quotient(testing::quotient_path("b8_8_n24_s4"));
    EXPECT_EQ(intersect_quotients(s4, trivial).index, 24);
    EXPECT_EQ(intersect_quotients(s4, s4).index, 24);
    QuotientSpec c2 = cyclic_quotient(sig, 2, {0, 0, 0, 1});
    QuotientSpec c3 = cyclic_quotient(sig, 3, {0, 1, 0, 1});
    QuotientSpec both = intersect_quotients(c2, c3);
    EXPECT_EQ(both.index, 6);
    EXPECT_EQ(group_order(both.perms), 6u);
}

TEST(Intersection, IndexBoundsOnRandomCyclicPairs) {
    std::mt19937_64 rng(23);
    BravaisSignature sig = BravaisSignature::from_pq(10, 5);
    std::uniform_int_distribution<int> size(1, 9);
    int checked = 0;
    while (checked < 40) {
        int n1 = size(rng), n2 = size(rng);
        auto exps = [&](int n) {
            std::uniform_int_distribution<int> e(0, n - 1);
            std::vector<int> out(4);
            for (auto &x : out) {
                x = e(rng);
            }
            return out;
        };
        QuotientSpec q1, q2;
        try {
            q1 = cyclic_quotient(sig, n1, exps(n1));
            q2 = cyclic_quotient(sig, n2, exps(n2));
        } catch (const Error &) {
            continue;  // exponents do not generate Z_n
        }
        int l = intersect_quotients(q1, q2).index;
        EXPECT_GE(l, std::lcm(n1, n2));
        EXPECT_LE(l, n1 * n2);
        if (std::gcd(n1, n2) == 1) {
            EXPECT_EQ(l, n1 * n2);
        }
        ++checked;
    }
}

}  // namespace
}  // namespace hyperlat
