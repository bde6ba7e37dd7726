#pragma once

#include <utility>

#include "artic/mat3.hpp"
#include "artic/vec3.hpp"

namespace artic {

// Direction vector constrained to unit length (within 1e-9).
class UnitVec3 {
public:
    // Canonical direction used where no meaningful one exists.
    constexpr UnitVec3() : v_{0, 0, 1} {}

    // Normalizes v; throws DegenerateGeometry if ||v|| <= eps.
    static UnitVec3 normalize(const Vec3& v, double eps = 1e-12);

    // Wraps a vector that is already unit length; throws if it is not.
    static UnitVec3 from_unit(const Vec3& v, double tol = 1e-9);

    constexpr const Vec3& vec() const { return v_; }
    constexpr UnitVec3 flipped() const { return UnitVec3(-v_); }

private:
    constexpr explicit UnitVec3(const Vec3& v) : v_(v) {}
    Vec3 v_;
};

// Proper rotation (orthonormal, det +1).
struct Rotation {
    Mat3 m;

    static constexpr Rotation identity() { return {}; }

    // Rodrigues formula; axis must be unit.
    static Rotation from_axis_angle(const UnitVec3& axis, double angle);

    Vec3 operator*(const Vec3& v) const { return m * v; }
    Rotation operator*(const Rotation& o) const { return {m * o.m}; }
    Rotation inverse() const { return {m.transposed()}; }

    // Orthonormality and det(+1) check, both within tol.
    bool is_valid(double tol = 1e-9) const;
};

struct RigidTransform {
    Rotation rotation;
    Vec3 translation;

    static constexpr RigidTransform identity() { return {}; }
    static RigidTransform translate(const Vec3& t) { return {Rotation::identity(), t}; }

    Vec3 apply(const Vec3& p) const { return rotation * p + translation; }
};

// result applies b first, then a.
RigidTransform compose(const RigidTransform& a, const RigidTransform& b);
RigidTransform invert(const RigidTransform& t);

// Line in space: unit direction plus a point it passes through.
struct ScrewAxis {
    UnitVec3 direction;
    Vec3 position;
};

// Rotation by `angle` about the axis line followed by translation of
// `distance` along the axis direction.
struct ScrewMotion {
    ScrewAxis axis;
    double angle = 0.0;     // radians, in (-pi, pi]
    double distance = 0.0;  // along axis.direction
};

// Axis and angle in [0, pi] of a rotation. Identity (angle below tol)
// reports the canonical direction (0,0,1); near pi the axis sign is fixed
// so its largest-magnitude component is positive.
std::pair<UnitVec3, double> rotation_axis_angle(const Rotation& r);

// Chasles decomposition. Rotational branch needs angle > angle_epsilon;
// below it the transform is treated as a pure translation: angle 0,
// direction t/||t|| (canonical if ||t|| ~ 0), distance ||t||, position at
// the origin. The rotational branch returns the minimum-norm axis point in
// the plane orthogonal to the direction.
ScrewMotion screw_decompose(const RigidTransform& t, double angle_epsilon = 1e-7);

RigidTransform screw_to_transform(const ScrewMotion& m);

// Rigidly moves an axis: direction rotates, position maps as a point.
ScrewAxis transform_axis(const RigidTransform& t, const ScrewAxis& axis);

// Projects p onto the axis line (closest point on the line).
Vec3 project_onto_axis(const ScrewAxis& axis, const Vec3& p);

}  // namespace artic
