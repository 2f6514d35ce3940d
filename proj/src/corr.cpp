#include "seqmm/corr.hpp"

#include <cmath>
#include <stdexcept>

#include "seqmm/fft.hpp"
#include "seqmm/kernels.hpp"

namespace seqmm::corr {

namespace {

void check_index(const SequenceSet& x, int i, int j) {
    if (i < 0 || i >= x.m() || j < 0 || j >= x.m()) {
        throw std::out_of_range("sequence index out of range");
    }
}

double level_db(double magnitude, double reference, int n) {
    if (magnitude < 1e-16 * n) {
        return kDbFloor;
    }
    return 20.0 * std::log10(magnitude / reference);
}

}  // namespace

std::vector<cplx> cross_correlation_direct(const SequenceSet& x, int i, int j) {
    check_index(x, i, j);
    const int n = x.n();
    std::vector<cplx> out(2 * n - 1);
    const auto xi = x.column(i);
    const auto xj = x.column(j);
    for (int k = 0; k < n; ++k) {
        cplx acc = 0.0;
        for (int t = 0; t + k < n; ++t) {
            acc += xi[t + k] * std::conj(xj[t]);
        }
        out[k + n - 1] = acc;
    }
    for (int k = 1; k < n; ++k) {
        // r_{i,j}(-k) = conj(r_{j,i}(k))
        cplx acc = 0.0;
        for (int t = 0; t + k < n; ++t) {
            acc += xj[t + k] * std::conj(xi[t]);
        }
        out[n - 1 - k] = std::conj(acc);
    }
    return out;
}

CorrelationTable correlation_table_fft(const SequenceSet& x) {
    const int n = x.n();
    const int m = x.m();
    const std::size_t len = 2 * static_cast<std::size_t>(n);
    CorrelationTable table(m, n);

    std::vector<std::vector<cplx>> spectra(m);
    std::vector<cplx> padded(len, cplx{0.0, 0.0});
    for (int j = 0; j < m; ++j) {
        std::copy(x.column(j).begin(), x.column(j).end(), padded.begin());
        spectra[j].resize(len);
        fft::forward(padded.data(), spectra[j].data(), len);
    }

    std::vector<cplx> prod(len);
    std::vector<cplx> circ(len);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            kernels::hadamard_conj(spectra[i].data(), spectra[j].data(), prod.data(), len);
            fft::backward(prod.data(), circ.data(), len);
            const double scale = 1.0 / static_cast<double>(len);
            // circ holds [r(0), r(1), ..., r(n-1), 0, r(1-n), ..., r(-1)] times 2n.
            for (int k = 0; k < n; ++k) {
                table.r(i, j, k) = scale * circ[k];
            }
            if (j == i) {
                // r(i,i,0) is real and negative lags follow from the lag
                // symmetry; build both in so the table is Hermitian exactly,
                // not merely to roundoff.
                table.r(i, i, 0) = cplx{table.r(i, i, 0).real(), 0.0};
                for (int k = 1; k < n; ++k) {
                    table.r(i, i, -k) = std::conj(table.r(i, i, k));
                }
            } else {
                for (int k = 1; k < n; ++k) {
                    table.r(i, j, -k) = scale * circ[len - k];
                }
                for (int k = 1 - n; k < n; ++k) {
                    table.r(j, i, k) = std::conj(table.r(i, j, -k));
                }
            }
        }
    }
    return table;
}

double cisl_from_table(const CorrelationTable& table) {
    double acc = 0.0;
    for (int k = 1; k < table.n(); ++k) {
        cplx sum = 0.0;
        for (int m = 0; m < table.m(); ++m) {
            sum += table.r(m, m, k);
        }
        acc += std::norm(sum);
    }
    return acc;
}

double cisl(const SequenceSet& x) { return cisl_from_table(correlation_table_fft(x)); }

double psi_from_table(const CorrelationTable& table) {
    const int n = table.n();
    const int m = table.m();
    double acc = 0.0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            for (int k = 1 - n; k < n; ++k) {
                if (i == j && k == 0) {
                    continue;
                }
                acc += std::norm(table.r(i, j, k));
            }
        }
    }
    // The diagonal k=0 terms each contribute n^2 exactly, so skipping them
    // above equals the sum-all-minus-N^2 M form.
    return acc;
}

double psi(const SequenceSet& x) { return psi_from_table(correlation_table_fft(x)); }

double weighted_psi_from_table(const CorrelationTable& table, const WeightProfile& w) {
    const int n = table.n();
    const int m = table.m();
    if (w.n() != n) {
        throw std::invalid_argument("weight profile length must equal sequence length");
    }
    double acc = 0.0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            for (int k = 1 - n; k < n; ++k) {
                acc += w[std::abs(k)] * std::norm(table.r(i, j, k));
            }
        }
    }
    return acc - w[0] * static_cast<double>(n) * n * m;
}

double weighted_psi(const SequenceSet& x, const WeightProfile& w) {
    return weighted_psi_from_table(correlation_table_fft(x), w);
}

double psi_lower_bound(long n, long m) {
    if (n < 1 || m < 1) {
        throw std::invalid_argument("psi_lower_bound requires n, m >= 1");
    }
    return static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(m) *
           static_cast<double>(m - 1);
}

std::vector<double> complementary_level_db(const SequenceSet& x) {
    const int n = x.n();
    const CorrelationTable table = correlation_table_fft(x);
    double peak = 0.0;
    for (int m = 0; m < x.m(); ++m) {
        peak += table.r(m, m, 0).real();
    }
    std::vector<double> out(2 * n - 1);
    for (int k = 1 - n; k < n; ++k) {
        cplx sum = 0.0;
        for (int m = 0; m < x.m(); ++m) {
            sum += table.r(m, m, k);
        }
        out[k + n - 1] = level_db(std::abs(sum), peak, n);
    }
    return out;
}

std::vector<double> correlation_level_db(const CorrelationTable& table, int i, int j) {
    const int n = table.n();
    if (i < 0 || i >= table.m() || j < 0 || j >= table.m()) {
        throw std::out_of_range("sequence index out of range");
    }
    std::vector<double> out(2 * n - 1);
    for (int k = 1 - n; k < n; ++k) {
        out[k + n - 1] = level_db(std::abs(table.r(i, j, k)), static_cast<double>(n), n);
    }
    return out;
}

std::vector<double> correlation_level_db(const SequenceSet& x, int i, int j) {
    check_index(x, i, j);
    return correlation_level_db(correlation_table_fft(x), i, j);
}

}  // namespace seqmm::corr
