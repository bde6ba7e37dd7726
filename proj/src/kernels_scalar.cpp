#include <cmath>
#include <limits>

#include "kernels_detail.hpp"

namespace artic::kernels::detail {

void screw_residual_scalar(const double* ax, const double* ay, const double* az,
                           const double* bx, const double* by, const double* bz, std::size_t n,
                           const double r_mat[9], const double q[3], const double axis[3],
                           double sin_psi, double cos_psi, double delta,
                           bool with_grad, ScrewResidualSums& out) {
    const double rx = axis[0], ry = axis[1], rz = axis[2];
    // w = q + delta * r, the constant part of d.
    const double wx = q[0] + delta * rx;
    const double wy = q[1] + delta * ry;
    const double wz = q[2] + delta * rz;
    const double one_minus_c = 1.0 - cos_psi;

    for (std::size_t i = 0; i < n; ++i) {
        const double vx = ax[i] - q[0];
        const double vy = ay[i] - q[1];
        const double vz = az[i] - q[2];

        const double yx = r_mat[0] * vx + r_mat[1] * vy + r_mat[2] * vz;
        const double yy = r_mat[3] * vx + r_mat[4] * vy + r_mat[5] * vz;
        const double yz = r_mat[6] * vx + r_mat[7] * vy + r_mat[8] * vz;

        const double dx = yx + wx - bx[i];
        const double dy = yy + wy - by[i];
        const double dz = yz + wz - bz[i];

        const double len = std::sqrt(dx * dx + dy * dy + dz * dz);
        out.loss += len;
        if (!with_grad) continue;

        const double inv = len > 0.0 ? 1.0 / len : 0.0;
        const double ux = dx * inv, uy = dy * inv, uz = dz * inv;

        // R^T u
        const double rtux = r_mat[0] * ux + r_mat[3] * uy + r_mat[6] * uz;
        const double rtuy = r_mat[1] * ux + r_mat[4] * uy + r_mat[7] * uz;
        const double rtuz = r_mat[2] * ux + r_mat[5] * uy + r_mat[8] * uz;
        out.g_q[0] += ux - rtux;
        out.g_q[1] += uy - rtuy;
        out.g_q[2] += uz - rtuz;

        const double ru = rx * ux + ry * uy + rz * uz;
        out.g_alpha += ru;

        out.g_phi += (ry * yz - rz * yy) * ux + (rz * yx - rx * yz) * uy + (rx * yy - ry * yx) * uz;

        const double rv = rx * vx + ry * vy + rz * vz;
        const double cross_x = vy * uz - vz * uy;
        const double cross_y = vz * ux - vx * uz;
        const double cross_z = vx * uy - vy * ux;
        out.g_r[0] += sin_psi * cross_x + one_minus_c * (ru * vx + rv * ux) + delta * ux;
        out.g_r[1] += sin_psi * cross_y + one_minus_c * (ru * vy + rv * uy) + delta * uy;
        out.g_r[2] += sin_psi * cross_z + one_minus_c * (ru * vz + rv * uz) + delta * uz;
    }
}

void transform_points_scalar(const double r_mat[9], const double t[3],
                             const double* x, const double* y, const double* z,
                             double* ox, double* oy, double* oz, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double px = x[i], py = y[i], pz = z[i];
        ox[i] = r_mat[0] * px + r_mat[1] * py + r_mat[2] * pz + t[0];
        oy[i] = r_mat[3] * px + r_mat[4] * py + r_mat[5] * pz + t[1];
        oz[i] = r_mat[6] * px + r_mat[7] * py + r_mat[8] * pz + t[2];
    }
}

void nearest_neighbors_scalar(const double* qx, const double* qy, const double* qz, std::size_t nq,
                              const double* cx, const double* cy, const double* cz, std::size_t nc,
                              std::uint32_t* out_index) {
    for (std::size_t j = 0; j < nq; ++j) {
        const double px = qx[j], py = qy[j], pz = qz[j];
        double best = std::numeric_limits<double>::infinity();
        std::uint32_t best_i = 0;
        for (std::size_t i = 0; i < nc; ++i) {
            const double dx = cx[i] - px;
            const double dy = cy[i] - py;
            const double dz = cz[i] - pz;
            const double d2 = dx * dx + dy * dy + dz * dz;
            if (d2 < best) {
                best = d2;
                best_i = static_cast<std::uint32_t>(i);
            }
        }
        out_index[j] = best_i;
    }
}

}  // namespace artic::kernels::detail
