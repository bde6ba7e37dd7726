#include "artic/point_cloud.hpp"

#include <algorithm>
#include <cmath>

#include "artic/errors.hpp"
#include "artic/kernels.hpp"

namespace artic {

void PointCloud::reserve(std::size_t n) {
    xs_.reserve(n);
    ys_.reserve(n);
    zs_.reserve(n);
}

void PointCloud::add_point(const Vec3& p) {
    xs_.push_back(p.x);
    ys_.push_back(p.y);
    zs_.push_back(p.z);
}

void PointCloud::add_point(const Vec3& p, const Vec3& n) {
    add_point(p);
    nxs_.push_back(n.x);
    nys_.push_back(n.y);
    nzs_.push_back(n.z);
}

void PointCloud::set_point(std::size_t i, const Vec3& p) {
    xs_[i] = p.x;
    ys_[i] = p.y;
    zs_[i] = p.z;
}

Vec3 centroid(const PointCloud& c) {
    if (c.empty()) throw EmptyCloud("centroid of empty cloud");
    Vec3 sum;
    for (std::size_t i = 0; i < c.size(); ++i) sum += c.point(i);
    return sum / static_cast<double>(c.size());
}

double enclosing_radius(const PointCloud& c) {
    const Vec3 center = centroid(c);
    double max_sq = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i)
        max_sq = std::max(max_sq, (c.point(i) - center).squared_norm());
    return std::sqrt(max_sq);
}

PointCloud transform_cloud(const RigidTransform& t, const PointCloud& c) {
    PointCloud out = c;
    const std::size_t n = c.size();
    if (n == 0) return out;
    const double* r = t.rotation.m.m.data();
    const double tr[3] = {t.translation.x, t.translation.y, t.translation.z};
    kernels::transform_points(r, tr, c.xs().data(), c.ys().data(), c.zs().data(),
                              out.mutable_xs().data(), out.mutable_ys().data(),
                              out.mutable_zs().data(), n);
    if (c.has_normals()) {
        // Rotate directions in place; no translation.
        for (std::size_t i = 0; i < n; ++i) {
            const Vec3 nr = t.rotation * c.normal(i);
            const_cast<std::vector<double>&>(out.nxs())[i] = nr.x;
            const_cast<std::vector<double>&>(out.nys())[i] = nr.y;
            const_cast<std::vector<double>&>(out.nzs())[i] = nr.z;
        }
    }
    return out;
}

}  // namespace artic
