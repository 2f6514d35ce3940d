#include "seqmm/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace seqmm::oracle {

RealMatrix dense_shift_matrix(long l, long k) {
    if (std::abs(k) >= l) {
        throw std::invalid_argument("shift matrix requires |k| < l");
    }
    RealMatrix u = RealMatrix::Zero(l, l);
    for (long i = 0; i < l; ++i) {
        const long j = i + k;
        if (j >= 0 && j < l) {
            u(i, j) = 1.0;
        }
    }
    return u;
}

RealMatrix dense_L_matrix(const WeightProfile& w, long n, long m) {
    if (n * m > 64) {
        throw std::invalid_argument("dense_L_matrix guard: nm must be <= 64");
    }
    if (w.n() != n) {
        throw std::invalid_argument("weight profile length must equal n");
    }
    const long nm = n * m;
    const long dim = nm * nm;
    RealMatrix l_mat = RealMatrix::Zero(dim, dim);
    // vec(S_j^H U_k S_i) has ones at vec-positions (i*n + b)*nm + (j*n + a)
    // for every a, b with b - a = k.
    std::vector<long> positions;
    for (long i = 0; i < m; ++i) {
        for (long j = 0; j < m; ++j) {
            for (long k = 1 - n; k < n; ++k) {
                const double wk = w[static_cast<int>(std::labs(k))];
                if (wk == 0.0) {
                    continue;
                }
                positions.clear();
                for (long a = 0; a < n; ++a) {
                    const long b = a + k;
                    if (b >= 0 && b < n) {
                        positions.push_back((i * n + b) * nm + (j * n + a));
                    }
                }
                for (long p : positions) {
                    for (long q : positions) {
                        l_mat(p, q) += wk;
                    }
                }
            }
        }
    }
    return l_mat;
}

Matrix dense_R_matrix(const CorrelationTable& table, const WeightProfile& w) {
    const long n = table.n();
    const long m = table.m();
    if (n * m > 64) {
        throw std::invalid_argument("dense_R_matrix guard: nm must be <= 64");
    }
    if (w.n() != n) {
        throw std::invalid_argument("weight profile length must equal sequence length");
    }
    Matrix r_mat = Matrix::Zero(n * m, n * m);
    for (long i = 0; i < m; ++i) {
        for (long j = 0; j < m; ++j) {
            for (long a = 0; a < n; ++a) {
                for (long b = 0; b < n; ++b) {
                    const long k = b - a;
                    r_mat(i * n + a, j * n + b) =
                        w[static_cast<int>(std::labs(k))] *
                        table.r(static_cast<int>(i), static_cast<int>(j), static_cast<int>(-k));
                }
            }
        }
    }
    return r_mat;
}

RealMatrix dense_B_matrix(const WeightProfile& w, long n, long m) {
    if (n * m > 128) {
        throw std::invalid_argument("dense_B_matrix guard: nm must be <= 128");
    }
    if (w.n() != n) {
        throw std::invalid_argument("weight profile length must equal n");
    }
    RealMatrix big_w(n, n);
    for (long a = 0; a < n; ++a) {
        for (long b = 0; b < n; ++b) {
            const long k = std::labs(b - a);
            big_w(a, b) = w[static_cast<int>(k)] * static_cast<double>(n - k);
        }
    }
    RealMatrix b_mat(n * m, n * m);
    for (long i = 0; i < m; ++i) {
        for (long j = 0; j < m; ++j) {
            b_mat.block(i * n, j * n, n, n) = big_w;
        }
    }
    return b_mat;
}

Matrix dense_harmonic_matrix(long n) {
    if (n > 256) {
        throw std::invalid_argument("dense_harmonic_matrix guard: n must be <= 256");
    }
    if (n < 1) {
        throw std::invalid_argument("dense_harmonic_matrix requires n >= 1");
    }
    Matrix h(2 * n, n);
    for (long p = 0; p < 2 * n; ++p) {
        const double omega = std::numbers::pi * static_cast<double>(p) / static_cast<double>(n);
        for (long c = 0; c < n; ++c) {
            // Row p is h_{p+1}^H, i.e. conjugated harmonics.
            h(p, c) = std::polar(1.0, -omega * static_cast<double>(c));
        }
    }
    return h;
}

Vector stacked_vector(const SequenceSet& x) {
    Vector v(x.size());
    const auto s = x.stacked();
    for (int i = 0; i < x.size(); ++i) {
        v(i) = s[i];
    }
    return v;
}

}  // namespace seqmm::oracle
