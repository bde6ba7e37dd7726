// AVX2/FMA variants of the hot kernels. This TU is compiled with
// -mavx2 -mfma and must only be entered after the cpuid check in
// kernels_dispatch.cpp. Lane order is fixed, so results are deterministic
// for a given ISA (they differ from scalar in the last ulps because of FMA
// contraction and the 4-way accumulator split).

#include "kernels_detail.hpp"

#if defined(ARTIC_HAVE_AVX2_TU)

#include <immintrin.h>

#include <cmath>
#include <limits>

namespace artic::kernels::detail {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

void screw_residual_avx2(const double* ax, const double* ay, const double* az,
                         const double* bx, const double* by, const double* bz, std::size_t n,
                         const double r_mat[9], const double q[3], const double axis[3],
                         double sin_psi, double cos_psi, double delta,
                         bool with_grad, ScrewResidualSums& out) {
    const __m256d r00 = _mm256_set1_pd(r_mat[0]), r01 = _mm256_set1_pd(r_mat[1]), r02 = _mm256_set1_pd(r_mat[2]);
    const __m256d r10 = _mm256_set1_pd(r_mat[3]), r11 = _mm256_set1_pd(r_mat[4]), r12 = _mm256_set1_pd(r_mat[5]);
    const __m256d r20 = _mm256_set1_pd(r_mat[6]), r21 = _mm256_set1_pd(r_mat[7]), r22 = _mm256_set1_pd(r_mat[8]);
    const __m256d qx = _mm256_set1_pd(q[0]), qy = _mm256_set1_pd(q[1]), qz = _mm256_set1_pd(q[2]);
    const __m256d rx = _mm256_set1_pd(axis[0]), ry = _mm256_set1_pd(axis[1]), rz = _mm256_set1_pd(axis[2]);
    const __m256d wx = _mm256_set1_pd(q[0] + delta * axis[0]);
    const __m256d wy = _mm256_set1_pd(q[1] + delta * axis[1]);
    const __m256d wz = _mm256_set1_pd(q[2] + delta * axis[2]);
    const __m256d vs = _mm256_set1_pd(sin_psi);
    const __m256d vomc = _mm256_set1_pd(1.0 - cos_psi);
    const __m256d vdelta = _mm256_set1_pd(delta);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);

    __m256d acc_loss = zero;
    __m256d acc_gqx = zero, acc_gqy = zero, acc_gqz = zero;
    __m256d acc_grx = zero, acc_gry = zero, acc_grz = zero;
    __m256d acc_gphi = zero, acc_galpha = zero;

    const std::size_t nv = n & ~std::size_t(3);
    for (std::size_t i = 0; i < nv; i += 4) {
        const __m256d vx = _mm256_sub_pd(_mm256_loadu_pd(ax + i), qx);
        const __m256d vy = _mm256_sub_pd(_mm256_loadu_pd(ay + i), qy);
        const __m256d vz = _mm256_sub_pd(_mm256_loadu_pd(az + i), qz);

        const __m256d yx = _mm256_fmadd_pd(r00, vx, _mm256_fmadd_pd(r01, vy, _mm256_mul_pd(r02, vz)));
        const __m256d yy = _mm256_fmadd_pd(r10, vx, _mm256_fmadd_pd(r11, vy, _mm256_mul_pd(r12, vz)));
        const __m256d yz = _mm256_fmadd_pd(r20, vx, _mm256_fmadd_pd(r21, vy, _mm256_mul_pd(r22, vz)));

        const __m256d dx = _mm256_sub_pd(_mm256_add_pd(yx, wx), _mm256_loadu_pd(bx + i));
        const __m256d dy = _mm256_sub_pd(_mm256_add_pd(yy, wy), _mm256_loadu_pd(by + i));
        const __m256d dz = _mm256_sub_pd(_mm256_add_pd(yz, wz), _mm256_loadu_pd(bz + i));

        const __m256d len2 = _mm256_fmadd_pd(dx, dx, _mm256_fmadd_pd(dy, dy, _mm256_mul_pd(dz, dz)));
        const __m256d len = _mm256_sqrt_pd(len2);
        acc_loss = _mm256_add_pd(acc_loss, len);
        if (!with_grad) continue;

        const __m256d nonzero = _mm256_cmp_pd(len, zero, _CMP_GT_OQ);
        const __m256d inv = _mm256_and_pd(_mm256_div_pd(one, len), nonzero);
        const __m256d ux = _mm256_mul_pd(dx, inv);
        const __m256d uy = _mm256_mul_pd(dy, inv);
        const __m256d uz = _mm256_mul_pd(dz, inv);

        const __m256d rtux = _mm256_fmadd_pd(r00, ux, _mm256_fmadd_pd(r10, uy, _mm256_mul_pd(r20, uz)));
        const __m256d rtuy = _mm256_fmadd_pd(r01, ux, _mm256_fmadd_pd(r11, uy, _mm256_mul_pd(r21, uz)));
        const __m256d rtuz = _mm256_fmadd_pd(r02, ux, _mm256_fmadd_pd(r12, uy, _mm256_mul_pd(r22, uz)));
        acc_gqx = _mm256_add_pd(acc_gqx, _mm256_sub_pd(ux, rtux));
        acc_gqy = _mm256_add_pd(acc_gqy, _mm256_sub_pd(uy, rtuy));
        acc_gqz = _mm256_add_pd(acc_gqz, _mm256_sub_pd(uz, rtuz));

        const __m256d ru = _mm256_fmadd_pd(rx, ux, _mm256_fmadd_pd(ry, uy, _mm256_mul_pd(rz, uz)));
        acc_galpha = _mm256_add_pd(acc_galpha, ru);

        // (r x y) . u
        const __m256d rxy_x = _mm256_fmsub_pd(ry, yz, _mm256_mul_pd(rz, yy));
        const __m256d rxy_y = _mm256_fmsub_pd(rz, yx, _mm256_mul_pd(rx, yz));
        const __m256d rxy_z = _mm256_fmsub_pd(rx, yy, _mm256_mul_pd(ry, yx));
        acc_gphi = _mm256_add_pd(
            acc_gphi,
            _mm256_fmadd_pd(rxy_x, ux, _mm256_fmadd_pd(rxy_y, uy, _mm256_mul_pd(rxy_z, uz))));

        const __m256d rv = _mm256_fmadd_pd(rx, vx, _mm256_fmadd_pd(ry, vy, _mm256_mul_pd(rz, vz)));
        const __m256d cx = _mm256_fmsub_pd(vy, uz, _mm256_mul_pd(vz, uy));
        const __m256d cy = _mm256_fmsub_pd(vz, ux, _mm256_mul_pd(vx, uz));
        const __m256d cz = _mm256_fmsub_pd(vx, uy, _mm256_mul_pd(vy, ux));
        // s (v x u) + (1-c) (ru v + rv u) + delta u
        acc_grx = _mm256_add_pd(
            acc_grx, _mm256_fmadd_pd(vs, cx,
                                     _mm256_fmadd_pd(vomc, _mm256_fmadd_pd(ru, vx, _mm256_mul_pd(rv, ux)),
                                                     _mm256_mul_pd(vdelta, ux))));
        acc_gry = _mm256_add_pd(
            acc_gry, _mm256_fmadd_pd(vs, cy,
                                     _mm256_fmadd_pd(vomc, _mm256_fmadd_pd(ru, vy, _mm256_mul_pd(rv, uy)),
                                                     _mm256_mul_pd(vdelta, uy))));
        acc_grz = _mm256_add_pd(
            acc_grz, _mm256_fmadd_pd(vs, cz,
                                     _mm256_fmadd_pd(vomc, _mm256_fmadd_pd(ru, vz, _mm256_mul_pd(rv, uz)),
                                                     _mm256_mul_pd(vdelta, uz))));
    }

    out.loss += hsum(acc_loss);
    if (with_grad) {
        out.g_q[0] += hsum(acc_gqx);
        out.g_q[1] += hsum(acc_gqy);
        out.g_q[2] += hsum(acc_gqz);
        out.g_r[0] += hsum(acc_grx);
        out.g_r[1] += hsum(acc_gry);
        out.g_r[2] += hsum(acc_grz);
        out.g_phi += hsum(acc_gphi);
        out.g_alpha += hsum(acc_galpha);
    }

    if (nv < n) {
        screw_residual_scalar(ax + nv, ay + nv, az + nv, bx + nv, by + nv, bz + nv, n - nv,
                              r_mat, q, axis, sin_psi, cos_psi, delta, with_grad, out);
    }
}

void transform_points_avx2(const double r_mat[9], const double t[3],
                           const double* x, const double* y, const double* z,
                           double* ox, double* oy, double* oz, std::size_t n) {
    const __m256d r00 = _mm256_set1_pd(r_mat[0]), r01 = _mm256_set1_pd(r_mat[1]), r02 = _mm256_set1_pd(r_mat[2]);
    const __m256d r10 = _mm256_set1_pd(r_mat[3]), r11 = _mm256_set1_pd(r_mat[4]), r12 = _mm256_set1_pd(r_mat[5]);
    const __m256d r20 = _mm256_set1_pd(r_mat[6]), r21 = _mm256_set1_pd(r_mat[7]), r22 = _mm256_set1_pd(r_mat[8]);
    const __m256d tx = _mm256_set1_pd(t[0]), ty = _mm256_set1_pd(t[1]), tz = _mm256_set1_pd(t[2]);

    const std::size_t nv = n & ~std::size_t(3);
    for (std::size_t i = 0; i < nv; i += 4) {
        const __m256d px = _mm256_loadu_pd(x + i);
        const __m256d py = _mm256_loadu_pd(y + i);
        const __m256d pz = _mm256_loadu_pd(z + i);
        const __m256d rxo = _mm256_fmadd_pd(r00, px, _mm256_fmadd_pd(r01, py, _mm256_fmadd_pd(r02, pz, tx)));
        const __m256d ryo = _mm256_fmadd_pd(r10, px, _mm256_fmadd_pd(r11, py, _mm256_fmadd_pd(r12, pz, ty)));
        const __m256d rzo = _mm256_fmadd_pd(r20, px, _mm256_fmadd_pd(r21, py, _mm256_fmadd_pd(r22, pz, tz)));
        _mm256_storeu_pd(ox + i, rxo);
        _mm256_storeu_pd(oy + i, ryo);
        _mm256_storeu_pd(oz + i, rzo);
    }
    if (nv < n)
        transform_points_scalar(r_mat, t, x + nv, y + nv, z + nv, ox + nv, oy + nv, oz + nv, n - nv);
}

void nearest_neighbors_avx2(const double* qx, const double* qy, const double* qz, std::size_t nq,
                            const double* cx, const double* cy, const double* cz, std::size_t nc,
                            std::uint32_t* out_index) {
    const std::size_t ncv = nc & ~std::size_t(3);
    for (std::size_t j = 0; j < nq; ++j) {
        const __m256d px = _mm256_set1_pd(qx[j]);
        const __m256d py = _mm256_set1_pd(qy[j]);
        const __m256d pz = _mm256_set1_pd(qz[j]);

        __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
        __m256d best_idx = _mm256_setzero_pd();
        __m256d idx = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
        const __m256d idx_step = _mm256_set1_pd(4.0);

        for (std::size_t i = 0; i < ncv; i += 4) {
            const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(cx + i), px);
            const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(cy + i), py);
            const __m256d dz = _mm256_sub_pd(_mm256_loadu_pd(cz + i), pz);
            const __m256d d2 = _mm256_fmadd_pd(dx, dx, _mm256_fmadd_pd(dy, dy, _mm256_mul_pd(dz, dz)));
            const __m256d lt = _mm256_cmp_pd(d2, best, _CMP_LT_OQ);
            best = _mm256_blendv_pd(best, d2, lt);
            best_idx = _mm256_blendv_pd(best_idx, idx, lt);
            idx = _mm256_add_pd(idx, idx_step);
        }

        alignas(32) double bd[4], bi[4];
        _mm256_store_pd(bd, best);
        _mm256_store_pd(bi, best_idx);
        double best_d = std::numeric_limits<double>::infinity();
        std::uint32_t best_i = 0;
        for (int l = 0; l < 4; ++l) {
            const auto cand = static_cast<std::uint32_t>(bi[l]);
            if (bd[l] < best_d || (bd[l] == best_d && cand < best_i)) {
                best_d = bd[l];
                best_i = cand;
            }
        }
        for (std::size_t i = ncv; i < nc; ++i) {
            const double dx = cx[i] - qx[j];
            const double dy = cy[i] - qy[j];
            const double dz = cz[i] - qz[j];
            const double d2 = dx * dx + dy * dy + dz * dz;
            if (d2 < best_d) {
                best_d = d2;
                best_i = static_cast<std::uint32_t>(i);
            }
        }
        out_index[j] = best_i;
    }
}

}  // namespace artic::kernels::detail

#endif  // ARTIC_HAVE_AVX2_TU
