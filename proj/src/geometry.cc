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

#include "hyperlat/geometry.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hyperlat/errors.h"

namespace hyperlat {

DiskPoint::DiskPoint(double re, double im) : DiskPoint(Complex(re, im)) {
}

DiskPoint::DiskPoint(Complex z) : z_(z) {
    if (!(std::norm(z) < 1.0)) {
        std::ostringstream os;
        os << "point (" << z.real() << ", " << z.imag() << ") is not inside the unit disk";
        throw Error(ErrorKind::OutsideDisk, os.str());
    }
}

double hyperbolic_distance(const DiskPoint &z1, const DiskPoint &z2) {
    double num = 2.0 * std::norm(z1.z() - z2.z());
    double den = (1.0 - std::norm(z1.z())) * (1.0 - std::norm(z2.z()));
    return std::acosh(1.0 + num / den);
}

MobiusTransform::MobiusTransform(Complex a, Complex b) {
    double det = std::norm(a) - std::norm(b);
    if (!(det > 0.0)) {
        throw Error(ErrorKind::InvariantViolation, "Mobius pair with |a| <= |b| does not preserve the disk");
    }
    double s = std::sqrt(det);
    a_ = a / s;
    b_ = b / s;
}

MobiusTransform MobiusTransform::rotation(double theta) {
    return MobiusTransform(std::polar(1.0, theta / 2.0), Complex(0.0, 0.0));
}

MobiusTransform MobiusTransform::boost(double eta) {
    return MobiusTransform(Complex(std::cosh(eta / 2.0), 0.0), Complex(std::sinh(eta / 2.0), 0.0));
}

MobiusTransform MobiusTransform::to_origin(const DiskPoint &z) {
    return MobiusTransform(Complex(1.0, 0.0), -z.z());
}

Complex MobiusTransform::apply(Complex z) const {
    return (a_ * z + b_) / (std::conj(b_) * z + std::conj(a_));
}

DiskPoint MobiusTransform::apply(const DiskPoint &z) const {
    Complex w = apply(z.z());
    // Rounding can push far-out images onto the boundary circle.
    double n = std::norm(w);
    if (n >= 1.0) {
        w /= std::sqrt(n) * (1.0 + 1e-15);
    }
    return DiskPoint(w);
}

MobiusTransform MobiusTransform::inverse() const {
    MobiusTransform inv;
    inv.a_ = std::conj(a_);
    inv.b_ = -b_;
    return inv;
}

double MobiusTransform::trace_magnitude() const {
    return 2.0 * std::abs(a_.real());
}

double MobiusTransform::distance_to(const MobiusTransform &other) const {
    double plus = std::max(std::abs(a_ - other.a_), std::abs(b_ - other.b_));
    double minus = std::max(std::abs(a_ + other.a_), std::abs(b_ + other.b_));
    return std::min(plus, minus);
}

MobiusTransform compose(const MobiusTransform &g, const MobiusTransform &h) {
    // [[a, b], [b*, a*]] products stay in that form.
    Complex a = g.a() * h.a() + g.b() * std::conj(h.b());
    Complex b = g.a() * h.b() + g.b() * std::conj(h.a());
    return MobiusTransform(a, b);
}

MobiusTransform operator*(const MobiusTransform &g, const MobiusTransform &h) {
    return compose(g, h);
}

IsometryClass classify(const MobiusTransform &g) {
    if (std::abs(g.b()) <= kGeometricTol) {
        return IsometryClass::Elliptic;
    }
    double t = g.trace_magnitude();
    if (std::abs(t - 2.0) <= kGeometricTol) {
        return IsometryClass::Parabolic;
    }
    return t < 2.0 ? IsometryClass::Elliptic : IsometryClass::Hyperbolic;
}

bool is_hyperbolic_pattern(int p, int q) {
    return p >= 3 && q >= 3 && (p - 2) * (q - 2) > 4;
}

double polygon_radius(int p, int q) {
    if (!is_hyperbolic_pattern(p, q)) {
        std::ostringstream os;
        os << "{" << p << "," << q << "} is not hyperbolic: (p-2)(q-2) = " << (p - 2) * (q - 2) << " <= 4";
        throw Error(ErrorKind::NonHyperbolicPattern, os.str());
    }
    const double pi = std::numbers::pi;
    return std::sqrt(std::cos(pi / p + pi / q) / std::cos(pi / p - pi / q));
}

RegularPolygon regular_polygon(int p, int q, double phase) {
    RegularPolygon poly;
    poly.p = p;
    poly.q = q;
    poly.radius = polygon_radius(p, q);
    poly.phase = phase;
    poly.vertices.reserve(p);
    for (int k = 1; k <= p; ++k) {
        poly.vertices.emplace_back(std::polar(poly.radius, 2.0 * std::numbers::pi * k / p + phase));
    }
    return poly;
}

RegularPolygon regular_polygon(int p, int q) {
    return regular_polygon(p, q, std::numbers::pi / p);
}

double RegularPolygon::edge_length() const {
    return hyperbolic_distance(vertices[0], vertices[1]);
}

double RegularPolygon::inradius() const {
    const double pi = std::numbers::pi;
    return std::acosh(std::cos(pi / q) / std::sin(pi / p));
}

double interior_angle(const DiskPoint &prev, const DiskPoint &vertex, const DiskPoint &next) {
    // Moving the vertex to the origin turns both geodesics into diameters,
    // and Mobius maps are conformal.
    MobiusTransform m = MobiusTransform::to_origin(vertex);
    double a1 = std::arg(m.apply(prev.z()));
    double a2 = std::arg(m.apply(next.z()));
    double diff = std::abs(a1 - a2);
    if (diff > std::numbers::pi) {
        diff = 2.0 * std::numbers::pi - diff;
    }
    return diff;
}

namespace {

// Isometry taking `base` to the origin and `other` onto the positive real axis.
MobiusTransform normal_frame(const DiskPoint &base, const DiskPoint &other) {
    MobiusTransform m = MobiusTransform::to_origin(base);
    Complex w = m.apply(other.z());
    double theta = std::abs(w) > 0.0 ? std::arg(w) : 0.0;
    return compose(MobiusTransform::rotation(-theta), m);
}

}  // namespace

MobiusTransform isometry_from_point_pairs(
    const DiskPoint &za, const DiskPoint &zb, const DiskPoint &wa, const DiskPoint &wb) {
    double dz = hyperbolic_distance(za, zb);
    double dw = hyperbolic_distance(wa, wb);
    if (std::abs(dz - dw) > kGeometricTol) {
        std::ostringstream os;
        os.precision(17);
        os << "source pair distance " << dz << " differs from target pair distance " << dw;
        throw Error(ErrorKind::DistanceMismatch, os.str());
    }
    MobiusTransform from = normal_frame(za, zb);
    MobiusTransform to = normal_frame(wa, wb);
    return compose(to.inverse(), from);
}

}  // namespace hyperlat
