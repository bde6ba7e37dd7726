#pragma once

#include <cstddef>
#include <vector>

#include "artic/geometry.hpp"
#include "artic/vec3.hpp"

namespace artic {

// Ordered point set, stored as structure-of-arrays for the kernels.
// Normals are optional; when present there is one per point.
class PointCloud {
public:
    std::size_t size() const { return xs_.size(); }
    bool empty() const { return xs_.empty(); }
    bool has_normals() const { return !nxs_.empty(); }

    void reserve(std::size_t n);
    void add_point(const Vec3& p);
    void add_point(const Vec3& p, const Vec3& n);

    Vec3 point(std::size_t i) const { return {xs_[i], ys_[i], zs_[i]}; }
    Vec3 normal(std::size_t i) const { return {nxs_[i], nys_[i], nzs_[i]}; }
    void set_point(std::size_t i, const Vec3& p);

    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }
    const std::vector<double>& zs() const { return zs_; }
    const std::vector<double>& nxs() const { return nxs_; }
    const std::vector<double>& nys() const { return nys_; }
    const std::vector<double>& nzs() const { return nzs_; }

    std::vector<double>& mutable_xs() { return xs_; }
    std::vector<double>& mutable_ys() { return ys_; }
    std::vector<double>& mutable_zs() { return zs_; }
    void set_normal(std::size_t i, const Vec3& n);

    bool operator==(const PointCloud& o) const = default;

private:
    std::vector<double> xs_, ys_, zs_;
    std::vector<double> nxs_, nys_, nzs_;
};

// Arithmetic mean of the points. Throws EmptyCloud.
Vec3 centroid(const PointCloud& c);

// Radius of the sphere centered at the centroid that contains all points
// (upper-bounding stand-in for the minimal enclosing sphere). Throws
// EmptyCloud.
double enclosing_radius(const PointCloud& c);

// Maps every point by t; normals are rotated only.
PointCloud transform_cloud(const RigidTransform& t, const PointCloud& c);

}  // namespace artic
