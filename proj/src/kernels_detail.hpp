#pragma once

#include "artic/kernels.hpp"

// Per-ISA entry points behind the dispatch in kernels_dispatch.cpp.
namespace artic::kernels::detail {

void screw_residual_scalar(const double* ax, const double* ay, const double* az,
                           const double* bx, const double* by, const double* bz, std::size_t n,
                           const double r_mat[9], const double q[3], const double axis[3],
                           double sin_psi, double cos_psi, double delta,
                           bool with_grad, ScrewResidualSums& out);

void transform_points_scalar(const double r_mat[9], const double t[3],
                             const double* x, const double* y, const double* z,
                             double* ox, double* oy, double* oz, std::size_t n);

void nearest_neighbors_scalar(const double* qx, const double* qy, const double* qz, std::size_t nq,
                              const double* cx, const double* cy, const double* cz, std::size_t nc,
                              std::uint32_t* out_index);

#if defined(ARTIC_HAVE_AVX2_TU)
void screw_residual_avx2(const double* ax, const double* ay, const double* az,
                         const double* bx, const double* by, const double* bz, std::size_t n,
                         const double r_mat[9], const double q[3], const double axis[3],
                         double sin_psi, double cos_psi, double delta,
                         bool with_grad, ScrewResidualSums& out);

void transform_points_avx2(const double r_mat[9], const double t[3],
                           const double* x, const double* y, const double* z,
                           double* ox, double* oy, double* oz, std::size_t n);

void nearest_neighbors_avx2(const double* qx, const double* qy, const double* qz, std::size_t nq,
                            const double* cx, const double* cy, const double* cz, std::size_t nc,
                            std::uint32_t* out_index);
#endif

}  // namespace artic::kernels::detail
