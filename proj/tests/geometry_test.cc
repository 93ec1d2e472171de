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

#include <cmath>
#include <numbers>
#include <random>

#include "hyperlat/errors.h"
#include "hyperlat/geometry.h"

namespace hyperlat {
namespace {

using std::numbers::pi;

DiskPoint random_point(std::mt19937_64 &rng, double max_radius = 0.95) {
    std::uniform_real_distribution<double> radius(0.0, max_radius);
    std::uniform_real_distribution<double> angle(0.0, 2 * pi);
    return DiskPoint(std::polar(radius(rng), angle(rng)));
}

MobiusTransform random_transform(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> angle(0.0, 2 * pi);
    std::uniform_real_distribution<double> eta(0.0, 2.0);
    return MobiusTransform::rotation(angle(rng)) * MobiusTransform::boost(eta(rng)) *
           MobiusTransform::rotation(angle(rng));
}

TEST(DiskPoint, RejectsBoundaryAndOutside) {
    EXPECT_NO_THROW(DiskPoint(0.999, 0.0));
    EXPECT_THROW(DiskPoint(1.0, 0.0), Error);
    EXPECT_THROW(DiskPoint(0.8, 0.8), Error);
    try {
        DiskPoint(0.0, -1.0);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::OutsideDisk);
    }
}

TEST(HyperbolicDistance, KnownValues) {
    EXPECT_EQ(hyperbolic_distance(DiskPoint(0, 0), DiskPoint(0, 0)), 0.0);
    EXPECT_NEAR(hyperbolic_distance(DiskPoint(0, 0), DiskPoint(0.5, 0)), 2 * std::atanh(0.5), 1e-12);
    EXPECT_NEAR(hyperbolic_distance(DiskPoint(0, 0), DiskPoint(0.5, 0)), std::log(3.0), 1e-12);
    EXPECT_NEAR(hyperbolic_distance(DiskPoint(-0.5, 0), DiskPoint(0.5, 0)), 2 * std::log(3.0), 1e-12);
}

TEST(HyperbolicDistance, FromOriginMatchesClosedForm) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        DiskPoint z = random_point(rng);
        EXPECT_NEAR(hyperbolic_distance(DiskPoint(0, 0), z), 2 * std::atanh(std::abs(z.z())), 1e-12);
    }
}

TEST(Mobius, NormalizesToSu11) {
    MobiusTransform g({3.0, 1.0}, {0.5, -2.0});
    EXPECT_NEAR(std::norm(g.a()) - std::norm(g.b()), 1.0, 1e-12);
    EXPECT_THROW(MobiusTransform({1.0, 0.0}, {1.0, 0.0}), Error);
}

TEST(Mobius, IdentityAndRotation) {
    DiskPoint z(0.3, -0.4);
    EXPECT_NEAR(std::abs(MobiusTransform::identity().apply(z).z() - z.z()), 0.0, 1e-15);
    const double theta = 1.1;
    Complex expected = std::polar(1.0, theta) * z.z();
    EXPECT_NEAR(std::abs(MobiusTransform::rotation(theta).apply(z).z() - expected), 0.0, 1e-12);
}

TEST(Mobius, PreservesDistance) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        MobiusTransform g = random_transform(rng);
        DiskPoint z1 = random_point(rng, 0.8), z2 = random_point(rng, 0.8);
        double before = hyperbolic_distance(z1, z2);
        double after = hyperbolic_distance(g.apply(z1), g.apply(z2));
        EXPECT_NEAR(after, before, 1e-12 * std::max(1.0, before * 1e3));
    }
}

TEST(Mobius, GroupLaws) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        MobiusTransform f = random_transform(rng), g = random_transform(rng), h = random_transform(rng);
        EXPECT_TRUE(compose(g, MobiusTransform::identity()).approx_equal(g, 1e-12));
        EXPECT_TRUE(compose(g, g.inverse()).approx_equal(MobiusTransform::identity(), 1e-10));
        EXPECT_TRUE(((f * g) * h).approx_equal(f * (g * h), 1e-10));
    }
    EXPECT_TRUE(compose(MobiusTransform::rotation(0.4), MobiusTransform::rotation(0.9))
                    .approx_equal(MobiusTransform::rotation(1.3), 1e-12));
}

TEST(Mobius, EqualityIsModuloSign) {
    MobiusTransform g({2.0, 1.0}, {0.3, 0.7});
    MobiusTransform minus_g(-g.a(), -g.b());
    EXPECT_TRUE(g.approx_equal(minus_g, 1e-15));
    // A full 2 pi rotation is -identity in SU(1,1).
    EXPECT_TRUE(MobiusTransform::rotation(2 * pi).approx_equal(MobiusTransform::identity(), 1e-12));
}

TEST(Classify, KnownCases) {
    EXPECT_EQ(classify(MobiusTransform::rotation(pi / 4)), IsometryClass::Elliptic);
    EXPECT_EQ(classify(MobiusTransform::identity()), IsometryClass::Elliptic);
    MobiusTransform boost({std::cosh(1.0), 0.0}, {std::sinh(1.0), 0.0});
    EXPECT_EQ(classify(boost), IsometryClass::Hyperbolic);
    EXPECT_NEAR(boost.trace_magnitude(), 2 * std::cosh(1.0), 1e-12);
}

TEST(Classify, InvariantUnderConjugation) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        MobiusTransform h = random_transform(rng);
        MobiusTransform elliptic = MobiusTransform::rotation(0.7);
        MobiusTransform hyperbolic = MobiusTransform::boost(0.9);
        EXPECT_EQ(classify(h * elliptic * h.inverse()), IsometryClass::Elliptic);
        EXPECT_EQ(classify(h * hyperbolic * h.inverse()), IsometryClass::Hyperbolic);
    }
}

TEST(RegularPolygon, Radius) {
    EXPECT_NEAR(regular_polygon(8, 8, 0.0).radius, std::pow(2.0, -0.25), 1e-12);
    double expected = std::sqrt(std::cos(pi / 8 + pi / 3) / std::cos(pi / 8 - pi / 3));
    EXPECT_NEAR(regular_polygon(8, 3, 0.0).radius, expected, 1e-12);
    EXPECT_NEAR(regular_polygon(8, 3, 0.0).radius, 0.40563, 5e-5);
}

TEST(RegularPolygon, RejectsNonHyperbolic) {
    for (auto [p, q] : {std::pair{4, 4}, {6, 3}, {3, 6}, {5, 3}, {3, 3}}) {
        try {
            regular_polygon(p, q, 0.0);
            FAIL() << p << "," << q;
        } catch (const Error &e) {
            EXPECT_EQ(e.kind(), ErrorKind::NonHyperbolicPattern);
        }
    }
    EXPECT_TRUE(is_hyperbolic_pattern(7, 3));
    EXPECT_FALSE(is_hyperbolic_pattern(4, 4));
}

TEST(RegularPolygon, IsRegularWithPrescribedAngles) {
    for (auto [p, q] : {std::pair{8, 3}, {10, 3}, {8, 8}, {10, 5}, {3, 8}, {7, 3}}) {
        RegularPolygon poly = regular_polygon(p, q, 0.3);
        for (int k = 0; k < p; ++k) {
            const DiskPoint &prev = poly.vertices[(k + p - 1) % p];
            const DiskPoint &cur = poly.vertices[k];
            const DiskPoint &next = poly.vertices[(k + 1) % p];
            EXPECT_NEAR(std::abs(cur.z()), poly.radius, 1e-12);
            EXPECT_NEAR(hyperbolic_distance(cur, next), poly.edge_length(), 1e-9);
            EXPECT_NEAR(interior_angle(prev, cur, next), 2 * pi / q, 1e-9);
        }
    }
}

TEST(RegularPolygon, DefaultPhasePutsEdgeMidpointOnRealAxis) {
    RegularPolygon poly = regular_polygon(8, 3);
    // Vertices 7 and 8 sit at angles -pi/8 and pi/8.
    Complex mid = 0.5 * (poly.vertices[6].z() + poly.vertices[7].z());
    EXPECT_NEAR(mid.imag(), 0.0, 1e-12);
    EXPECT_GT(mid.real(), 0.0);
}

TEST(IsometryFromPointPairs, KnownCases) {
    DiskPoint a(0.1, 0.2), b(-0.3, 0.4);
    EXPECT_TRUE(isometry_from_point_pairs(a, b, a, b).approx_equal(MobiusTransform::identity(), 1e-10));

    MobiusTransform half_turn = isometry_from_point_pairs(DiskPoint(0, 0), DiskPoint(0.5, 0), DiskPoint(0, 0),
                                                          DiskPoint(-0.5, 0));
    EXPECT_TRUE(half_turn.approx_equal(MobiusTransform::rotation(pi), 1e-10));

    const double t = 0.3;
    const double shift = 2 * hyperbolic_distance(DiskPoint(0, 0), DiskPoint(t, 0));
    double u = std::tanh((shift + 2 * std::atanh(t)) / 2);
    MobiusTransform boost = isometry_from_point_pairs(DiskPoint(-t, 0), DiskPoint(t, 0), DiskPoint(t, 0),
                                                      DiskPoint(u, 0));
    EXPECT_NEAR(boost.a().imag(), 0.0, 1e-12);
    EXPECT_NEAR(boost.b().imag(), 0.0, 1e-12);
    EXPECT_EQ(classify(boost), IsometryClass::Hyperbolic);
    EXPECT_NEAR(2 * std::acosh(boost.trace_magnitude() / 2), shift, 1e-9);
}

TEST(IsometryFromPointPairs, RandomRecovery) {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 100; ++i) {
        MobiusTransform g = random_transform(rng);
        DiskPoint za = random_point(rng, 0.7), zb = random_point(rng, 0.7);
        MobiusTransform found = isometry_from_point_pairs(za, zb, g.apply(za), g.apply(zb));
        EXPECT_TRUE(found.approx_equal(g, 1e-8));
    }
}

TEST(IsometryFromPointPairs, DistanceMismatch) {
    try {
        isometry_from_point_pairs(DiskPoint(0, 0), DiskPoint(0.2, 0), DiskPoint(0, 0), DiskPoint(0.5, 0));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::DistanceMismatch);
    }
}

}  // namespace
}  // namespace hyperlat
