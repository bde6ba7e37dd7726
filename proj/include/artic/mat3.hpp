#pragma once

#include <array>

#include "artic/vec3.hpp"

namespace artic {

// Row-major 3x3 matrix.
struct Mat3 {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static constexpr Mat3 identity() { return {}; }

    static constexpr Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
        Mat3 a;
        a.m = {r0.x, r0.y, r0.z, r1.x, r1.y, r1.z, r2.x, r2.y, r2.z};
        return a;
    }

    // a b^T
    static constexpr Mat3 outer(const Vec3& a, const Vec3& b) {
        return from_rows(b * a.x, b * a.y, b * a.z);
    }

    constexpr double operator()(int r, int c) const { return m[static_cast<size_t>(3 * r + c)]; }
    constexpr double& operator()(int r, int c) { return m[static_cast<size_t>(3 * r + c)]; }

    constexpr Vec3 operator*(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }

    constexpr Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j) + (*this)(i, 2) * o(2, j);
        return r;
    }

    constexpr Mat3 operator+(const Mat3& o) const {
        Mat3 r;
        for (size_t i = 0; i < 9; ++i) r.m[i] = m[i] + o.m[i];
        return r;
    }

    constexpr Mat3 operator-(const Mat3& o) const {
        Mat3 r;
        for (size_t i = 0; i < 9; ++i) r.m[i] = m[i] - o.m[i];
        return r;
    }

    constexpr Mat3 operator*(double k) const {
        Mat3 r;
        for (size_t i = 0; i < 9; ++i) r.m[i] = m[i] * k;
        return r;
    }

    constexpr Mat3 transposed() const {
        return from_rows({m[0], m[3], m[6]}, {m[1], m[4], m[7]}, {m[2], m[5], m[8]});
    }

    constexpr double trace() const { return m[0] + m[4] + m[8]; }

    constexpr double det() const {
        return m[0] * (m[4] * m[8] - m[5] * m[7]) -
               m[1] * (m[3] * m[8] - m[5] * m[6]) +
               m[2] * (m[3] * m[7] - m[4] * m[6]);
    }

    // Transposed multiply: M^T v.
    constexpr Vec3 tmul(const Vec3& v) const {
        return {m[0] * v.x + m[3] * v.y + m[6] * v.z,
                m[1] * v.x + m[4] * v.y + m[7] * v.z,
                m[2] * v.x + m[5] * v.y + m[8] * v.z};
    }
};

// Skew-symmetric matrix [v]_x such that [v]_x w = v x w.
inline constexpr Mat3 skew(const Vec3& v) {
    return Mat3::from_rows({0, -v.z, v.y}, {v.z, 0, -v.x}, {-v.y, v.x, 0});
}

inline double frobenius_norm(const Mat3& a) {
    double s = 0;
    for (double e : a.m) s += e * e;
    return std::sqrt(s);
}

}  // namespace artic
