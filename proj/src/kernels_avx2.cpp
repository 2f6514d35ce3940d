// AVX2 variants of the elementwise kernels. This translation unit is the only
// one compiled with -mavx2/-mfma; callers must gate on avx2_available().
#include "seqmm/kernels.hpp"

#include <cassert>
#include <limits>

#if defined(__x86_64__) && defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace seqmm::kernels {

bool avx2_compiled() { return true; }

namespace {

inline const double* dptr(const cplx* z) { return reinterpret_cast<const double*>(z); }
inline double* dptr(cplx* z) { return reinterpret_cast<double*>(z); }

// Complex product of lane pairs: (a.re*b.re - a.im*b.im, a.re*b.im + a.im*b.re).
inline __m256d cmul(__m256d va, __m256d vb) {
    const __m256d ar = _mm256_movedup_pd(va);        // [a0r a0r a1r a1r]
    const __m256d ai = _mm256_permute_pd(va, 0xF);   // [a0i a0i a1i a1i]
    const __m256d bs = _mm256_permute_pd(vb, 0x5);   // [b0i b0r b1i b1r]
    return _mm256_fmaddsub_pd(ar, vb, _mm256_mul_pd(ai, bs));
}

const __m256d kConjMask = _mm256_setr_pd(0.0, -0.0, 0.0, -0.0);

}  // namespace

void mag_squared_avx2(const cplx* z, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v0 = _mm256_loadu_pd(dptr(z + i));
        const __m256d v1 = _mm256_loadu_pd(dptr(z + i + 2));
        const __m256d s = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
        _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(s, 0xD8));  // [m0 m2 m1 m3] -> [m0 m1 m2 m3]
    }
    mag_squared_scalar(z + i, out + i, n - i);
}

void mag_squared_add_avx2(const cplx* z, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v0 = _mm256_loadu_pd(dptr(z + i));
        const __m256d v1 = _mm256_loadu_pd(dptr(z + i + 2));
        const __m256d s = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
        const __m256d m = _mm256_permute4x64_pd(s, 0xD8);
        _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(out + i), m));
    }
    mag_squared_add_scalar(z + i, out + i, n - i);
}

void hadamard_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(dptr(a + i));
        const __m256d vb = _mm256_loadu_pd(dptr(b + i));
        _mm256_storeu_pd(dptr(out + i), cmul(va, vb));
    }
    hadamard_scalar(a + i, b + i, out + i, n - i);
}

void hadamard_add_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(dptr(a + i));
        const __m256d vb = _mm256_loadu_pd(dptr(b + i));
        const __m256d acc = _mm256_loadu_pd(dptr(out + i));
        _mm256_storeu_pd(dptr(out + i), _mm256_add_pd(acc, cmul(va, vb)));
    }
    hadamard_add_scalar(a + i, b + i, out + i, n - i);
}

void hadamard_conj_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = _mm256_loadu_pd(dptr(a + i));
        const __m256d vb = _mm256_xor_pd(_mm256_loadu_pd(dptr(b + i)), kConjMask);
        _mm256_storeu_pd(dptr(out + i), cmul(va, vb));
    }
    hadamard_conj_scalar(a + i, b + i, out + i, n - i);
}

void real_hadamard_avx2(const double* a, const cplx* b, cplx* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d q = _mm256_loadu_pd(a + i);
        const __m256d lo = _mm256_permute4x64_pd(q, 0x50);  // [a0 a0 a1 a1]
        const __m256d hi = _mm256_permute4x64_pd(q, 0xFA);  // [a2 a2 a3 a3]
        _mm256_storeu_pd(dptr(out + i), _mm256_mul_pd(lo, _mm256_loadu_pd(dptr(b + i))));
        _mm256_storeu_pd(dptr(out + i + 2), _mm256_mul_pd(hi, _mm256_loadu_pd(dptr(b + i + 2))));
    }
    real_hadamard_scalar(a + i, b + i, out + i, n - i);
}

void axpby_avx2(double alpha, const cplx* x, double beta, const cplx* y, cplx* out,
                std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    const __m256d vb = _mm256_set1_pd(beta);
    const std::size_t d = 2 * n;
    const double* xd = dptr(x);
    const double* yd = dptr(y);
    double* od = dptr(out);
    std::size_t i = 0;
    for (; i + 4 <= d; i += 4) {
        const __m256d t = _mm256_mul_pd(vb, _mm256_loadu_pd(yd + i));
        _mm256_storeu_pd(od + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(xd + i), t));
    }
    for (; i < d; ++i) {
        od[i] = alpha * xd[i] + beta * yd[i];
    }
}

namespace {

template <bool Negate>
inline void phase_project_avx2_impl(const cplx* z, cplx* out, std::size_t n) {
    const __m256d ones = _mm256_set1_pd(1.0);
    const __m256d unit = _mm256_setr_pd(1.0, 0.0, 1.0, 0.0);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d negmask = _mm256_set1_pd(-0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v = _mm256_loadu_pd(dptr(z + i));
        const __m256d t = _mm256_mul_pd(v, v);
        const __m256d m2 = _mm256_hadd_pd(t, t);  // [|z0|^2 |z0|^2 |z1|^2 |z1|^2]
        const __m256d inv = _mm256_div_pd(ones, _mm256_sqrt_pd(m2));
        __m256d res = _mm256_mul_pd(v, inv);
        if constexpr (Negate) {
            res = _mm256_xor_pd(res, negmask);
        }
        const __m256d iszero = _mm256_cmp_pd(m2, zero, _CMP_EQ_OQ);
        _mm256_storeu_pd(dptr(out + i), _mm256_blendv_pd(res, unit, iszero));
    }
    if constexpr (Negate) {
        phase_project_neg_scalar(z + i, out + i, n - i);
    } else {
        phase_project_scalar(z + i, out + i, n - i);
    }
}

}  // namespace

void phase_project_avx2(const cplx* z, cplx* out, std::size_t n) {
    phase_project_avx2_impl<false>(z, out, n);
}

void phase_project_neg_avx2(const cplx* z, cplx* out, std::size_t n) {
    phase_project_avx2_impl<true>(z, out, n);
}

double norm_sq_avx2(const cplx* z, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    const double* zd = dptr(z);
    const std::size_t d = 2 * n;
    std::size_t i = 0;
    for (; i + 4 <= d; i += 4) {
        const __m256d v = _mm256_loadu_pd(zd + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < d; ++i) {
        total += zd[i] * zd[i];
    }
    return total;
}

double sum_sq_avx2(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(a + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) {
        total += a[i] * a[i];
    }
    return total;
}

MinMaxEvenOdd minmax_even_odd_avx2(const double* a, std::size_t n) {
    assert(n >= 2 && n % 2 == 0);
    constexpr double inf = std::numeric_limits<double>::infinity();
    __m256d vmin = _mm256_set1_pd(inf);
    __m256d vmax = _mm256_set1_pd(-inf);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(a + i);
        vmin = _mm256_min_pd(vmin, v);
        vmax = _mm256_max_pd(vmax, v);
    }
    alignas(32) double lo[4];
    alignas(32) double hi[4];
    _mm256_store_pd(lo, vmin);
    _mm256_store_pd(hi, vmax);
    MinMaxEvenOdd r{std::min(lo[0], lo[2]), std::max(hi[0], hi[2]),
                    std::min(lo[1], lo[3]), std::max(hi[1], hi[3])};
    for (; i + 1 < n; i += 2) {
        r.min_even = std::min(r.min_even, a[i]);
        r.max_even = std::max(r.max_even, a[i]);
        r.min_odd = std::min(r.min_odd, a[i + 1]);
        r.max_odd = std::max(r.max_odd, a[i + 1]);
    }
    return r;
}

MinMaxEvenOdd minmax_even_odd_re_avx2(const cplx* z, std::size_t n) {
    assert(n >= 2 && n % 2 == 0);
    constexpr double inf = std::numeric_limits<double>::infinity();
    // Lanes 1 and 3 accumulate imaginary parts; only lanes 0 and 2 are read.
    __m256d vmin = _mm256_set1_pd(inf);
    __m256d vmax = _mm256_set1_pd(-inf);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v = _mm256_loadu_pd(dptr(z + i));
        vmin = _mm256_min_pd(vmin, v);
        vmax = _mm256_max_pd(vmax, v);
    }
    alignas(32) double lo[4];
    alignas(32) double hi[4];
    _mm256_store_pd(lo, vmin);
    _mm256_store_pd(hi, vmax);
    MinMaxEvenOdd r{lo[0], hi[0], lo[2], hi[2]};
    for (; i + 1 < n; i += 2) {
        r.min_even = std::min(r.min_even, z[i].real());
        r.max_even = std::max(r.max_even, z[i].real());
        r.min_odd = std::min(r.min_odd, z[i + 1].real());
        r.max_odd = std::max(r.max_odd, z[i + 1].real());
    }
    return r;
}

}  // namespace seqmm::kernels

#else  // non-x86 or AVX2 unavailable at compile time: fall through to scalar

namespace seqmm::kernels {

bool avx2_compiled() { return false; }

void mag_squared_avx2(const cplx* z, double* out, std::size_t n) { mag_squared_scalar(z, out, n); }
void mag_squared_add_avx2(const cplx* z, double* out, std::size_t n) { mag_squared_add_scalar(z, out, n); }
void hadamard_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n) { hadamard_scalar(a, b, out, n); }
void hadamard_add_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n) { hadamard_add_scalar(a, b, out, n); }
void hadamard_conj_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n) { hadamard_conj_scalar(a, b, out, n); }
void real_hadamard_avx2(const double* a, const cplx* b, cplx* out, std::size_t n) { real_hadamard_scalar(a, b, out, n); }
void axpby_avx2(double alpha, const cplx* x, double beta, const cplx* y, cplx* out, std::size_t n) {
    axpby_scalar(alpha, x, beta, y, out, n);
}
void phase_project_avx2(const cplx* z, cplx* out, std::size_t n) { phase_project_scalar(z, out, n); }
void phase_project_neg_avx2(const cplx* z, cplx* out, std::size_t n) { phase_project_neg_scalar(z, out, n); }
double norm_sq_avx2(const cplx* z, std::size_t n) { return norm_sq_scalar(z, n); }
double sum_sq_avx2(const double* a, std::size_t n) { return sum_sq_scalar(a, n); }
MinMaxEvenOdd minmax_even_odd_avx2(const double* a, std::size_t n) { return minmax_even_odd_scalar(a, n); }
MinMaxEvenOdd minmax_even_odd_re_avx2(const cplx* z, std::size_t n) { return minmax_even_odd_re_scalar(z, n); }

}  // namespace seqmm::kernels

#endif
