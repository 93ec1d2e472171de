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

#ifndef HYPERLAT_GEOMETRY_H
#define HYPERLAT_GEOMETRY_H

#include <complex>
#include <vector>

namespace hyperlat {

using Complex = std::complex<double>;

/// Tolerance for pure arithmetic identities.
inline constexpr double kArithmeticTol = 1e-12;
/// Tolerance for geometric constructions that chain many transforms.
inline constexpr double kGeometricTol = 1e-9;

/// A point of the open unit (Poincare) disk.
class DiskPoint {
   public:
    DiskPoint() = default;
    /// Throws OutsideDisk unless re^2 + im^2 < 1.
    DiskPoint(double re, double im);
    explicit DiskPoint(Complex z);

    Complex z() const {
        return z_;
    }
    double re() const {
        return z_.real();
    }
    double im() const {
        return z_.imag();
    }

   private:
    Complex z_{0.0, 0.0};
};

/// Hyperbolic distance in the Poincare disk.
double hyperbolic_distance(const DiskPoint &z1, const DiskPoint &z2);

enum class IsometryClass { Elliptic, Parabolic, Hyperbolic };

/// Orientation-preserving disk isometry z -> (a z + b) / (conj(b) z + conj(a)),
/// stored as an SU(1,1) pair with |a|^2 - |b|^2 = 1. Equality is taken modulo
/// the global sign (a, b) ~ (-a, -b).
class MobiusTransform {
   public:
    /// Identity.
    MobiusTransform() = default;
    /// Normalizes (a, b) so that |a|^2 - |b|^2 = 1. Requires |a| > |b|.
    MobiusTransform(Complex a, Complex b);

    static MobiusTransform identity() {
        return {};
    }
    /// Rotation about the origin by `theta`: a = exp(i theta / 2).
    static MobiusTransform rotation(double theta);
    /// Translation along the real diameter by hyperbolic distance `eta`.
    static MobiusTransform boost(double eta);
    /// The translation taking `z` to the origin along the geodesic through both.
    static MobiusTransform to_origin(const DiskPoint &z);

    Complex a() const {
        return a_;
    }
    Complex b() const {
        return b_;
    }

    DiskPoint apply(const DiskPoint &z) const;
    Complex apply(Complex z) const;
    MobiusTransform inverse() const;
    /// |trace| of the 2x2 matrix, 2 |Re a|.
    double trace_magnitude() const;

    /// Maximum entry deviation from `other`, minimized over the global sign.
    double distance_to(const MobiusTransform &other) const;
    bool approx_equal(const MobiusTransform &other, double tol = kGeometricTol) const {
        return distance_to(other) <= tol;
    }

   private:
    Complex a_{1.0, 0.0};
    Complex b_{0.0, 0.0};
};

/// compose(g, h) acts as g after h.
MobiusTransform compose(const MobiusTransform &g, const MobiusTransform &h);
MobiusTransform operator*(const MobiusTransform &g, const MobiusTransform &h);

inline DiskPoint apply(const MobiusTransform &g, const DiskPoint &z) {
    return g.apply(z);
}

/// Trace classification; pure rotations about the origin (including the
/// identity) are Elliptic.
IsometryClass classify(const MobiusTransform &g);

/// Regular hyperbolic p-gon with interior angles 2 pi / q, centred at the origin.
struct RegularPolygon {
    int p = 0;
    int q = 0;
    double radius = 0.0;
    double phase = 0.0;
    std::vector<DiskPoint> vertices;

    /// Hyperbolic side length.
    double edge_length() const;
    /// Hyperbolic distance from the centre to an edge midpoint.
    double inradius() const;
};

bool is_hyperbolic_pattern(int p, int q);

/// Euclidean radius of the regular {p,q} polygon in the disk.
double polygon_radius(int p, int q);

/// Vertex k (k = 1..p) sits at radius * exp(i (2 pi k / p + phase)).
/// Throws NonHyperbolicPattern unless (p-2)(q-2) > 4.
RegularPolygon regular_polygon(int p, int q, double phase);
/// Default phase pi / p puts an edge midpoint on the positive real axis.
RegularPolygon regular_polygon(int p, int q);

/// Interior angle at `vertex` between the geodesics towards `prev` and `next`.
double interior_angle(const DiskPoint &prev, const DiskPoint &vertex, const DiskPoint &next);

/// The unique orientation-preserving isometry g with g(za) = wa and
/// g(zb) = wb. Throws DistanceMismatch when d(za, zb) != d(wa, wb).
MobiusTransform isometry_from_point_pairs(
    const DiskPoint &za, const DiskPoint &zb, const DiskPoint &wa, const DiskPoint &wb);

}  // namespace hyperlat

#endif  // HYPERLAT_GEOMETRY_H
