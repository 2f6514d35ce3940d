#include "seqmm/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "seqmm/fft.hpp"
#include "seqmm/kernels.hpp"

namespace seqmm::spectral {

SpectrumVector circulant_spectrum(std::span<const cplx> first_col,
                                  std::span<const cplx> anti_col) {
    if (first_col.size() != anti_col.size() || first_col.empty()) {
        throw std::invalid_argument("circulant_spectrum requires equal nonempty column halves");
    }
    const std::size_t l = first_col.size();
    std::vector<cplx> c(2 * l);
    std::copy(first_col.begin(), first_col.end(), c.begin());
    std::copy(anti_col.begin(), anti_col.end(), c.begin() + l);
    SpectrumVector out;
    out.length_l = static_cast<long>(l);
    out.values = fft::forward(c);
    return out;
}

std::vector<cplx> toeplitz_matvec(const SpectrumVector& spec, std::span<const cplx> v) {
    const std::size_t l = static_cast<std::size_t>(spec.length_l);
    if (v.size() != l) {
        throw std::invalid_argument("toeplitz_matvec length mismatch");
    }
    const std::size_t len = 2 * l;
    std::vector<cplx> padded(len, cplx{0.0, 0.0});
    std::copy(v.begin(), v.end(), padded.begin());
    std::vector<cplx> freq(len);
    fft::forward(padded.data(), freq.data(), len);
    kernels::hadamard(spec.values.data(), freq.data(), freq.data(), len);
    fft::backward(freq.data(), padded.data(), len);
    const double scale = 1.0 / static_cast<double>(len);
    std::vector<cplx> out(l);
    for (std::size_t i = 0; i < l; ++i) {
        out[i] = scale * padded[i];
    }
    return out;
}

namespace {

// Parity-averaged extrema of Re(mu); the sum is invariant under the choice
// of which parity class is called even.
EigBoundPair parity_bounds(std::span<const cplx> mu) {
    const auto mm = kernels::minmax_even_odd_re(mu.data(), mu.size());
    return {0.5 * (mm.min_even + mm.min_odd), 0.5 * (mm.max_even + mm.max_odd)};
}

}  // namespace

EigBoundPair hermitian_toeplitz_eig_bounds(std::span<const cplx> first_col) {
    if (first_col.empty()) {
        throw std::invalid_argument("eig bounds require a nonempty first column");
    }
    const std::size_t l = first_col.size();
    std::vector<cplx> c(2 * l, cplx{0.0, 0.0});
    // c = [t_0, t_1, ..., t_{L-1}, 0, conj(t_{L-1}), ..., conj(t_1)]
    std::copy(first_col.begin(), first_col.end(), c.begin());
    for (std::size_t k = 1; k < l; ++k) {
        c[2 * l - k] = std::conj(first_col[k]);
    }
    const std::vector<cplx> mu = fft::forward(c);
    return parity_bounds(mu);
}

double lambda_u_css(std::span<const cplx> weighted_lags) {
    if (weighted_lags.empty() || weighted_lags.size() % 2 != 0) {
        throw std::invalid_argument("lambda_u_css expects a length-2L lag vector");
    }
    const std::vector<cplx> mu = fft::forward(weighted_lags);
    return parity_bounds(mu).upper;
}

std::vector<cplx> w_embedding_column(const WeightProfile& w, long n) {
    if (w.n() != n) {
        throw std::invalid_argument("weight profile length must equal n");
    }
    std::vector<cplx> c(2 * static_cast<std::size_t>(n), cplx{0.0, 0.0});
    for (long k = 0; k < n; ++k) {
        c[k] = w[static_cast<int>(k)] * static_cast<double>(n - k);
        if (k >= 1) {
            c[2 * n - k] = c[k];
        }
    }
    return c;
}

double lambda_w(const WeightProfile& w, long n) {
    const std::vector<cplx> c = w_embedding_column(w, n);
    const std::vector<cplx> mu = fft::forward(c);
    return parity_bounds(mu).lower;
}

double lambda_b(double lambda_w_val, long m) {
    if (m < 1) {
        throw std::invalid_argument("lambda_b requires m >= 1");
    }
    if (m == 1) {
        return lambda_w_val;
    }
    return std::min(static_cast<double>(m) * lambda_w_val, 0.0);
}

double lambda_a(std::span<const double> a, long n) {
    if (a.size() != 2 * static_cast<std::size_t>(n)) {
        throw std::invalid_argument("lambda_a expects a length-2n vector");
    }
    const auto mm = kernels::minmax_even_odd(a.data(), a.size());
    return static_cast<double>(n) * (mm.max_even + mm.max_odd);
}

double r_infinity_norm(const CorrelationTable& table, const WeightProfile& w) {
    const int n = table.n();
    const int m = table.m();
    if (w.n() != n) {
        throw std::invalid_argument("weight profile length must equal sequence length");
    }
    // Block (i, j) is Toeplitz with t_k = w_{|k|} r_ij(-k); the sum of row r
    // is the length-n window of |t_k| ending at k = n-1-r. Prefix sums over
    // the 2n-1 lag magnitudes give every window in O(1).
    const int lags = 2 * n - 1;
    std::vector<double> prefix(static_cast<std::size_t>(m) * m * (lags + 1), 0.0);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            double* p = prefix.data() + (static_cast<std::size_t>(i) * m + j) * (lags + 1);
            const auto r = table.pair(i, j);
            p[0] = 0.0;
            for (int idx = 0; idx < lags; ++idx) {
                const int k = idx - (n - 1);  // t index
                const double mag = w[std::abs(k)] * std::abs(r[(n - 1) - k]);  // |r_ij(-k)|
                p[idx + 1] = p[idx] + mag;
            }
        }
    }
    double best = 0.0;
    for (int i = 0; i < m; ++i) {
        for (int r = 0; r < n; ++r) {
            double row_sum = 0.0;
            for (int j = 0; j < m; ++j) {
                const double* p = prefix.data() + (static_cast<std::size_t>(i) * m + j) * (lags + 1);
                // k runs over [-r, n-1-r]; index = k + n - 1.
                row_sum += p[(n - 1 - r) + (n - 1) + 1] - p[(-r) + (n - 1)];
            }
            best = std::max(best, row_sum);
        }
    }
    return best;
}

}  // namespace seqmm::spectral
