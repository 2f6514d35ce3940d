#include "seqmm/kernels.hpp"

#include <atomic>
#include <cassert>
#include <cmath>
#include <limits>

namespace seqmm::kernels {

namespace {
std::atomic<bool> g_force_scalar{false};
}

bool avx2_available() {
#if defined(__x86_64__) && defined(__GNUC__)
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok;
#else
    return false;
#endif
}

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

bool using_avx2() {
    return avx2_compiled() && avx2_available() && !g_force_scalar.load(std::memory_order_relaxed);
}

void mag_squared_scalar(const cplx* z, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = z[i].real() * z[i].real() + z[i].imag() * z[i].imag();
    }
}

void mag_squared_add_scalar(const cplx* z, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] += z[i].real() * z[i].real() + z[i].imag() * z[i].imag();
    }
}

void hadamard_scalar(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double re = a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        const double im = a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
        out[i] = {re, im};
    }
}

void hadamard_add_scalar(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double re = a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        const double im = a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
        out[i] += cplx{re, im};
    }
}

void hadamard_conj_scalar(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double re = a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        const double im = a[i].imag() * b[i].real() - a[i].real() * b[i].imag();
        out[i] = {re, im};
    }
}

void real_hadamard_scalar(const double* a, const cplx* b, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = {a[i] * b[i].real(), a[i] * b[i].imag()};
    }
}

void axpby_scalar(double alpha, const cplx* x, double beta, const cplx* y, cplx* out,
                  std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = {alpha * x[i].real() + beta * y[i].real(),
                  alpha * x[i].imag() + beta * y[i].imag()};
    }
}

namespace {
// sign = +1 projects onto the phase of z, sign = -1 onto the phase of -z.
// |z|^2 underflowing to exact zero counts as zero.
template <int Sign>
inline void phase_project_impl(const cplx* z, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double m2 = z[i].real() * z[i].real() + z[i].imag() * z[i].imag();
        if (m2 == 0.0) {
            out[i] = {1.0, 0.0};
        } else {
            const double s = Sign / std::sqrt(m2);
            out[i] = {s * z[i].real(), s * z[i].imag()};
        }
    }
}
}  // namespace

void phase_project_scalar(const cplx* z, cplx* out, std::size_t n) {
    phase_project_impl<+1>(z, out, n);
}

void phase_project_neg_scalar(const cplx* z, cplx* out, std::size_t n) {
    phase_project_impl<-1>(z, out, n);
}

double norm_sq_scalar(const cplx* z, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += z[i].real() * z[i].real() + z[i].imag() * z[i].imag();
    }
    return acc;
}

double sum_sq_scalar(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += a[i] * a[i];
    }
    return acc;
}

MinMaxEvenOdd minmax_even_odd_scalar(const double* a, std::size_t n) {
    assert(n >= 2 && n % 2 == 0);
    constexpr double inf = std::numeric_limits<double>::infinity();
    MinMaxEvenOdd r{inf, -inf, inf, -inf};
    for (std::size_t i = 0; i + 1 < n; i += 2) {
        r.min_even = std::min(r.min_even, a[i]);
        r.max_even = std::max(r.max_even, a[i]);
        r.min_odd = std::min(r.min_odd, a[i + 1]);
        r.max_odd = std::max(r.max_odd, a[i + 1]);
    }
    return r;
}

MinMaxEvenOdd minmax_even_odd_re_scalar(const cplx* z, std::size_t n) {
    assert(n >= 2 && n % 2 == 0);
    constexpr double inf = std::numeric_limits<double>::infinity();
    MinMaxEvenOdd r{inf, -inf, inf, -inf};
    for (std::size_t i = 0; i + 1 < n; i += 2) {
        r.min_even = std::min(r.min_even, z[i].real());
        r.max_even = std::max(r.max_even, z[i].real());
        r.min_odd = std::min(r.min_odd, z[i + 1].real());
        r.max_odd = std::max(r.max_odd, z[i + 1].real());
    }
    return r;
}

#define SEQMM_DISPATCH(fn, ...)        \
    do {                               \
        if (using_avx2()) {            \
            fn##_avx2(__VA_ARGS__);    \
            return;                    \
        }                              \
        fn##_scalar(__VA_ARGS__);      \
    } while (0)

void mag_squared(const cplx* z, double* out, std::size_t n) { SEQMM_DISPATCH(mag_squared, z, out, n); }
void mag_squared_add(const cplx* z, double* out, std::size_t n) { SEQMM_DISPATCH(mag_squared_add, z, out, n); }
void hadamard(const cplx* a, const cplx* b, cplx* out, std::size_t n) { SEQMM_DISPATCH(hadamard, a, b, out, n); }
void hadamard_add(const cplx* a, const cplx* b, cplx* out, std::size_t n) { SEQMM_DISPATCH(hadamard_add, a, b, out, n); }
void hadamard_conj(const cplx* a, const cplx* b, cplx* out, std::size_t n) { SEQMM_DISPATCH(hadamard_conj, a, b, out, n); }
void real_hadamard(const double* a, const cplx* b, cplx* out, std::size_t n) { SEQMM_DISPATCH(real_hadamard, a, b, out, n); }
void axpby(double alpha, const cplx* x, double beta, const cplx* y, cplx* out, std::size_t n) {
    SEQMM_DISPATCH(axpby, alpha, x, beta, y, out, n);
}
void phase_project(const cplx* z, cplx* out, std::size_t n) { SEQMM_DISPATCH(phase_project, z, out, n); }
void phase_project_neg(const cplx* z, cplx* out, std::size_t n) { SEQMM_DISPATCH(phase_project_neg, z, out, n); }

double norm_sq(const cplx* z, std::size_t n) {
    return using_avx2() ? norm_sq_avx2(z, n) : norm_sq_scalar(z, n);
}

double sum_sq(const double* a, std::size_t n) {
    return using_avx2() ? sum_sq_avx2(a, n) : sum_sq_scalar(a, n);
}

MinMaxEvenOdd minmax_even_odd(const double* a, std::size_t n) {
    return using_avx2() ? minmax_even_odd_avx2(a, n) : minmax_even_odd_scalar(a, n);
}

MinMaxEvenOdd minmax_even_odd_re(const cplx* z, std::size_t n) {
    return using_avx2() ? minmax_even_odd_re_avx2(z, n) : minmax_even_odd_re_scalar(z, n);
}

#undef SEQMM_DISPATCH

}  // namespace seqmm::kernels
