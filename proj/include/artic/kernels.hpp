#pragma once

#include <cstddef>
#include <cstdint>

namespace artic::kernels {

enum class Isa { scalar, avx2 };

// ISA picked once from CPU features. Override with force_isa() or the
// ARTIC_ISA environment variable ("scalar" | "avx2"); an unsupported
// request falls back to scalar.
Isa active_isa();
void force_isa(Isa isa);
const char* isa_name(Isa isa);

// Sums over points of the screw-motion residual
//   v_i = a_i - q,  y_i = R v_i,  d_i = y_i + q + delta * r - b_i,
//   u_i = d_i / ||d_i||  (zero when d_i = 0),
// with s = sin(psi), c = cos(psi) of the relative angle psi baked into R:
//   loss    = sum ||d_i||
//   g_q     = sum (u_i - R^T u_i)
//   g_r     = sum s (v_i x u_i) + (1-c) ((r.u_i) v_i + (r.v_i) u_i) + delta u_i
//   g_phi   = sum (r x y_i) . u_i
//   g_alpha = sum r . u_i
struct ScrewResidualSums {
    double loss = 0;
    double g_q[3] = {0, 0, 0};
    double g_r[3] = {0, 0, 0};
    double g_phi = 0;
    double g_alpha = 0;
};

void screw_residual(const double* ax, const double* ay, const double* az,
                    const double* bx, const double* by, const double* bz, std::size_t n,
                    const double r_mat[9], const double q[3], const double axis[3],
                    double sin_psi, double cos_psi, double delta,
                    bool with_grad, ScrewResidualSums& out);

// out = R * p + t, streamed over SoA arrays. In-place (out == in) is allowed.
void transform_points(const double r_mat[9], const double t[3],
                      const double* x, const double* y, const double* z,
                      double* ox, double* oy, double* oz, std::size_t n);

// Brute-force nearest neighbor per query; distance ties resolve to the
// lowest cloud index.
void nearest_neighbors(const double* qx, const double* qy, const double* qz, std::size_t nq,
                       const double* cx, const double* cy, const double* cz, std::size_t nc,
                       std::uint32_t* out_index);

}  // namespace artic::kernels
