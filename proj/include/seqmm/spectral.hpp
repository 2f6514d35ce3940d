#pragma once

#include <span>
#include <vector>

#include "seqmm/types.hpp"

// Toeplitz/circulant embedding helpers and the closed-form eigenvalue bounds
// used by the solvers. An L x L Toeplitz matrix T with first column
// [t_0, t_-1, ..., t_{1-L}] and first row [t_0, t_1, ..., t_{L-1}] embeds in a
// 2L x 2L circulant whose spectrum is mu = F c with
// c = [t_0, t_-1, ..., t_{1-L}, 0, t_{L-1}, ..., t_1], giving
// T = (1/2L) F_{:,1:L}^H Diag(mu) F_{:,1:L}.
namespace seqmm::spectral {

struct SpectrumVector {
    std::vector<cplx> values;  // mu = F c, length 2L
    long length_l = 0;
};

struct EigBoundPair {
    double lower = 0.0;
    double upper = 0.0;
};

/// mu for the embedding above. first_col = [t_0, t_-1, ..., t_{1-L}],
/// anti_col = [0, t_{L-1}, ..., t_1]; both length L.
SpectrumVector circulant_spectrum(std::span<const cplx> first_col,
                                  std::span<const cplx> anti_col);

/// T v via two 2L-point transforms.
std::vector<cplx> toeplitz_matvec(const SpectrumVector& spec, std::span<const cplx> v);

/// Closed-form bounds on the extreme eigenvalues of the Hermitian Toeplitz
/// matrix with subdiagonal first column [t_0, t_1, ..., t_{L-1}]. The bounds
/// average the parity-split extrema of Re(mu).
EigBoundPair hermitian_toeplitz_eig_bounds(std::span<const cplx> first_col);

/// Upper bound on lambda_max(R - (L-1) z z^H) from the masked-lag vector c
/// (length 2L). Maxima are taken over all 2L spectrum positions.
double lambda_u_css(std::span<const cplx> weighted_lags);

/// Lower bound on lambda_min(W) where W is the Toeplitz matrix with entries
/// w_{|a-b|} (n - |a-b|).
double lambda_w(const WeightProfile& w, long n);

/// Lower bound on lambda_min(1_{MxM} kron W).
double lambda_b(double lambda_w_val, long m);

/// Upper bound on lambda_max(H^H Diag(a) H) for nonnegative a of length 2n.
double lambda_a(std::span<const double> a, long n);

/// Exact max-row-sum norm of the NM x NM block matrix with Toeplitz blocks
/// R_ij = sum_k w_k r_ij(-k) U_k, via sliding-window prefix sums.
double r_infinity_norm(const CorrelationTable& table, const WeightProfile& w);

/// The length-2n vector [w_0 n, w_1 (n-1), ..., w_{n-1}, 0, w_{n-1}, ..., w_1 (n-1)]
/// whose spectrum diagonalizes W.
std::vector<cplx> w_embedding_column(const WeightProfile& w, long n);

}  // namespace seqmm::spectral
