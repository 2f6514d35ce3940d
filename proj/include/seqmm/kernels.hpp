#pragma once

#include <cstddef>

#include "seqmm/types.hpp"

// Elementwise kernels shared by all solvers. Each kernel has a scalar
// reference implementation and an AVX2 variant; the unsuffixed entry point
// dispatches at runtime. The *_scalar and *_avx2 symbols stay visible so the
// two paths can be equivalence-tested against each other.
namespace seqmm::kernels {

/// Min/max over the even- and odd-indexed elements (0-based parity).
struct MinMaxEvenOdd {
    double min_even;
    double max_even;
    double min_odd;
    double max_odd;
};

/// True when the AVX2 variants were compiled into this build.
bool avx2_compiled();
/// True when the running CPU supports AVX2+FMA.
bool avx2_available();
/// Force the scalar path regardless of CPU support (testing hook).
void force_scalar(bool on);
/// Effective dispatch decision.
bool using_avx2();

// out[i] = |z[i]|^2
void mag_squared(const cplx* z, double* out, std::size_t n);
// out[i] += |z[i]|^2
void mag_squared_add(const cplx* z, double* out, std::size_t n);
// out[i] = a[i] * b[i]
void hadamard(const cplx* a, const cplx* b, cplx* out, std::size_t n);
// out[i] += a[i] * b[i]
void hadamard_add(const cplx* a, const cplx* b, cplx* out, std::size_t n);
// out[i] = a[i] * conj(b[i])
void hadamard_conj(const cplx* a, const cplx* b, cplx* out, std::size_t n);
// out[i] = a[i] * b[i] with real a
void real_hadamard(const double* a, const cplx* b, cplx* out, std::size_t n);
// out[i] = alpha * x[i] + beta * y[i] with real scalars
void axpby(double alpha, const cplx* x, double beta, const cplx* y, cplx* out, std::size_t n);
// out[i] = z[i]/|z[i]|; exact zeros map to 1
void phase_project(const cplx* z, cplx* out, std::size_t n);
// out[i] = -z[i]/|z[i]|; exact zeros map to 1
void phase_project_neg(const cplx* z, cplx* out, std::size_t n);
// sum |z[i]|^2
double norm_sq(const cplx* z, std::size_t n);
// sum a[i]^2
double sum_sq(const double* a, std::size_t n);
// parity-split min/max of a real array; n must be even and positive
MinMaxEvenOdd minmax_even_odd(const double* a, std::size_t n);
// parity-split min/max of Re(z); parity is that of the complex index
MinMaxEvenOdd minmax_even_odd_re(const cplx* z, std::size_t n);

// Scalar reference path.
void mag_squared_scalar(const cplx* z, double* out, std::size_t n);
void mag_squared_add_scalar(const cplx* z, double* out, std::size_t n);
void hadamard_scalar(const cplx* a, const cplx* b, cplx* out, std::size_t n);
void hadamard_add_scalar(const cplx* a, const cplx* b, cplx* out, std::size_t n);
void hadamard_conj_scalar(const cplx* a, const cplx* b, cplx* out, std::size_t n);
void real_hadamard_scalar(const double* a, const cplx* b, cplx* out, std::size_t n);
void axpby_scalar(double alpha, const cplx* x, double beta, const cplx* y, cplx* out,
                  std::size_t n);
void phase_project_scalar(const cplx* z, cplx* out, std::size_t n);
void phase_project_neg_scalar(const cplx* z, cplx* out, std::size_t n);
double norm_sq_scalar(const cplx* z, std::size_t n);
double sum_sq_scalar(const double* a, std::size_t n);
MinMaxEvenOdd minmax_even_odd_scalar(const double* a, std::size_t n);
MinMaxEvenOdd minmax_even_odd_re_scalar(const cplx* z, std::size_t n);

// AVX2 path. On non-x86 builds these fall through to the scalar path and
// avx2_compiled() reports false.
void mag_squared_avx2(const cplx* z, double* out, std::size_t n);
void mag_squared_add_avx2(const cplx* z, double* out, std::size_t n);
void hadamard_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n);
void hadamard_add_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n);
void hadamard_conj_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n);
void real_hadamard_avx2(const double* a, const cplx* b, cplx* out, std::size_t n);
void axpby_avx2(double alpha, const cplx* x, double beta, const cplx* y, cplx* out,
                std::size_t n);
void phase_project_avx2(const cplx* z, cplx* out, std::size_t n);
void phase_project_neg_avx2(const cplx* z, cplx* out, std::size_t n);
double norm_sq_avx2(const cplx* z, std::size_t n);
double sum_sq_avx2(const double* a, std::size_t n);
MinMaxEvenOdd minmax_even_odd_avx2(const double* a, std::size_t n);
MinMaxEvenOdd minmax_even_odd_re_avx2(const cplx* z, std::size_t n);

}  // namespace seqmm::kernels
