#include "artic/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "kernels_detail.hpp"

namespace artic::kernels {

namespace {

bool avx2_available() {
#if defined(ARTIC_HAVE_AVX2_TU)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa detect() {
    if (const char* env = std::getenv("ARTIC_ISA")) {
        if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
        if (std::strcmp(env, "avx2") == 0 && avx2_available()) return Isa::avx2;
    }
    return avx2_available() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& level() {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

}  // namespace

Isa active_isa() { return level().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
    if (isa == Isa::avx2 && !avx2_available()) isa = Isa::scalar;
    level().store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void screw_residual(const double* ax, const double* ay, const double* az,
                    const double* bx, const double* by, const double* bz, std::size_t n,
                    const double r_mat[9], const double q[3], const double axis[3],
                    double sin_psi, double cos_psi, double delta,
                    bool with_grad, ScrewResidualSums& out) {
#if defined(ARTIC_HAVE_AVX2_TU)
    if (active_isa() == Isa::avx2) {
        detail::screw_residual_avx2(ax, ay, az, bx, by, bz, n, r_mat, q, axis, sin_psi, cos_psi,
                                    delta, with_grad, out);
        return;
    }
#endif
    detail::screw_residual_scalar(ax, ay, az, bx, by, bz, n, r_mat, q, axis, sin_psi, cos_psi,
                                  delta, with_grad, out);
}

void transform_points(const double r_mat[9], const double t[3],
                      const double* x, const double* y, const double* z,
                      double* ox, double* oy, double* oz, std::size_t n) {
#if defined(ARTIC_HAVE_AVX2_TU)
    if (active_isa() == Isa::avx2) {
        detail::transform_points_avx2(r_mat, t, x, y, z, ox, oy, oz, n);
        return;
    }
#endif
    detail::transform_points_scalar(r_mat, t, x, y, z, ox, oy, oz, n);
}

void nearest_neighbors(const double* qx, const double* qy, const double* qz, std::size_t nq,
                       const double* cx, const double* cy, const double* cz, std::size_t nc,
                       std::uint32_t* out_index) {
#if defined(ARTIC_HAVE_AVX2_TU)
    if (active_isa() == Isa::avx2) {
        detail::nearest_neighbors_avx2(qx, qy, qz, nq, cx, cy, cz, nc, out_index);
        return;
    }
#endif
    detail::nearest_neighbors_scalar(qx, qy, qz, nq, cx, cy, cz, nc, out_index);
}

}  // namespace artic::kernels
