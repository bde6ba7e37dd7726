#include "artic/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "artic/errors.hpp"

namespace artic {

UnitVec3 UnitVec3::normalize(const Vec3& v, double eps) {
    const double n = v.norm();
    if (!(n > eps)) throw DegenerateGeometry("cannot normalize near-zero vector");
    return UnitVec3(v / n);
}

UnitVec3 UnitVec3::from_unit(const Vec3& v, double tol) {
    if (std::abs(v.norm() - 1.0) > tol) throw DegenerateGeometry("vector is not unit length");
    return UnitVec3(v);
}

Rotation Rotation::from_axis_angle(const UnitVec3& axis, double angle) {
    const Vec3 r = axis.vec();
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    // R = cos I + sin [r]_x + (1-cos) r r^T
    Mat3 m = Mat3::identity() * c + skew(r) * s + Mat3::outer(r, r) * (1.0 - c);
    return {m};
}

bool Rotation::is_valid(double tol) const {
    const Mat3 e = m.transposed() * m - Mat3::identity();
    for (double v : e.m)
        if (std::abs(v) > tol) return false;
    return std::abs(m.det() - 1.0) <= tol;
}

RigidTransform compose(const RigidTransform& a, const RigidTransform& b) {
    return {a.rotation * b.rotation, a.rotation * b.translation + a.translation};
}

RigidTransform invert(const RigidTransform& t) {
    const Rotation rinv = t.rotation.inverse();
    return {rinv, -(rinv * t.translation)};
}

std::pair<UnitVec3, double> rotation_axis_angle(const Rotation& r) {
    const Mat3& m = r.m;
    const double cos_angle = std::clamp((m.trace() - 1.0) * 0.5, -1.0, 1.0);
    const double angle = std::acos(cos_angle);

    constexpr double kIdentityTol = 1e-7;
    constexpr double kNearPiTol = 1e-6;

    if (angle < kIdentityTol) return {UnitVec3(), 0.0};

    if (angle < M_PI - kNearPiTol) {
        // vee(R - R^T) = 2 sin(angle) * axis
        const Vec3 v{m(2, 1) - m(1, 2), m(0, 2) - m(2, 0), m(1, 0) - m(0, 1)};
        return {UnitVec3::normalize(v), angle};
    }

    // Near pi the skew part vanishes; use (R + I)/2 = r r^T + O(pi - angle).
    const Mat3 s = (m + Mat3::identity()) * 0.5;
    int k = 0;
    if (s(1, 1) > s(k, k)) k = 1;
    if (s(2, 2) > s(k, k)) k = 2;
    Vec3 axis{s(k, 0), s(k, 1), s(k, 2)};
    axis = axis / std::sqrt(std::max(s(k, k), 1e-300));
    // Sign is ambiguous at pi; pick the largest-magnitude component positive.
    double best = axis.x;
    if (std::abs(axis.y) > std::abs(best)) best = axis.y;
    if (std::abs(axis.z) > std::abs(best)) best = axis.z;
    if (best < 0) axis = -axis;
    return {UnitVec3::normalize(axis), angle};
}

ScrewMotion screw_decompose(const RigidTransform& t, double angle_epsilon) {
    const auto [dir, angle] = rotation_axis_angle(t.rotation);

    if (angle <= angle_epsilon) {
        const Vec3& tr = t.translation;
        const double len = tr.norm();
        ScrewMotion m;
        m.axis.direction = len > 1e-12 ? UnitVec3::normalize(tr) : UnitVec3();
        m.axis.position = Vec3{};
        m.angle = 0.0;
        m.distance = len;
        return m;
    }

    const Vec3 r = dir.vec();
    const double d = r.dot(t.translation);           // pitch displacement
    const Vec3 t_perp = t.translation - r * d;
    // Minimum-norm q orthogonal to r solving (I - R) q = t_perp:
    //   q = (t_perp + cot(angle/2) r x t_perp) / 2
    const double cot_half = std::cos(angle * 0.5) / std::sin(angle * 0.5);
    const Vec3 q = (t_perp + r.cross(t_perp) * cot_half) * 0.5;

    ScrewMotion m;
    m.axis = {dir, q};
    m.angle = angle;
    m.distance = d;
    return m;
}

RigidTransform screw_to_transform(const ScrewMotion& m) {
    const Rotation rot = Rotation::from_axis_angle(m.axis.direction, m.angle);
    const Vec3 q = m.axis.position;
    // p -> R (p - q) + q + distance * r
    const Vec3 translation = q - rot * q + m.axis.direction.vec() * m.distance;
    return {rot, translation};
}

ScrewAxis transform_axis(const RigidTransform& t, const ScrewAxis& axis) {
    return {UnitVec3::normalize(t.rotation * axis.direction.vec()), t.apply(axis.position)};
}

Vec3 project_onto_axis(const ScrewAxis& axis, const Vec3& p) {
    const Vec3 r = axis.direction.vec();
    return axis.position + r * r.dot(p - axis.position);
}

}  // namespace artic
