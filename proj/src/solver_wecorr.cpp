#include "seqmm/solver_wecorr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mm_driver.hpp"
#include "seqmm/corr.hpp"
#include "seqmm/fft.hpp"
#include "seqmm/kernels.hpp"

namespace seqmm::solver {

namespace {

constexpr double kDegenerateDenominator = 1e-12;

// [w_0, w_1, ..., w_{n-1}, 0, w_{n-1}, ..., w_1]; entrywise weights for the
// circulant-layout lag vectors.
std::vector<double> weight_mask(const WeightProfile& w, int n) {
    std::vector<double> mask(2 * static_cast<std::size_t>(n), 0.0);
    for (int k = 0; k < n; ++k) {
        mask[k] = w[k];
        if (k >= 1) {
            mask[2 * n - k] = w[k];
        }
    }
    return mask;
}

// Zero-padded 2n-point spectra of the columns of x.
std::vector<std::vector<cplx>> column_spectra(const SequenceSet& x) {
    const std::size_t len = 2 * static_cast<std::size_t>(x.n());
    std::vector<std::vector<cplx>> spectra(x.m());
    std::vector<cplx> pad(len, cplx{0.0, 0.0});
    for (int j = 0; j < x.m(); ++j) {
        std::fill(pad.begin() + x.n(), pad.end(), cplx{0.0, 0.0});
        std::copy(x.column(j).begin(), x.column(j).end(), pad.begin());
        spectra[j].resize(len);
        fft::forward(pad.data(), spectra[j].data(), len);
    }
    return spectra;
}

// c_ij = wmask o [r_ij(0), ..., r_ij(n-1), 0, r_ij(1-n), ..., r_ij(-1)].
void weighted_lag_column(const CorrelationTable& table, std::span<const double> wmask, int i,
                         int j, std::vector<cplx>& out) {
    const int n = table.n();
    out.assign(2 * static_cast<std::size_t>(n), cplx{0.0, 0.0});
    for (int k = 0; k < n; ++k) {
        out[k] = wmask[k] * table.r(i, j, k);
    }
    for (int k = 1; k < n; ++k) {
        out[2 * n - k] = wmask[2 * n - k] * table.r(i, j, -k);
    }
}

// Spectra of every c_ij, indexed i*m + j.
std::vector<std::vector<cplx>> lag_spectra(const CorrelationTable& table,
                                           std::span<const double> wmask) {
    const int m = table.m();
    const std::size_t len = 2 * static_cast<std::size_t>(table.n());
    std::vector<std::vector<cplx>> chats(static_cast<std::size_t>(m) * m);
    std::vector<cplx> c;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            weighted_lag_column(table, wmask, i, j, c);
            auto& chat = chats[static_cast<std::size_t>(i) * m + j];
            chat.resize(len);
            fft::forward(c.data(), chat.data(), len);
        }
    }
    return chats;
}

// out(block i) = (1/2n) first n entries of F^H sum_j chat_ij o fcol_j.
std::vector<cplx> rx_from_spectra(const std::vector<std::vector<cplx>>& chats,
                                  const std::vector<std::vector<cplx>>& fcols, int n, int m) {
    const std::size_t len = 2 * static_cast<std::size_t>(n);
    const double scale = 1.0 / static_cast<double>(len);
    std::vector<cplx> out(static_cast<std::size_t>(n) * m);
    std::vector<cplx> acc(len);
    std::vector<cplx> row(len);
    for (int i = 0; i < m; ++i) {
        std::fill(acc.begin(), acc.end(), cplx{0.0, 0.0});
        for (int j = 0; j < m; ++j) {
            kernels::hadamard_add(chats[static_cast<std::size_t>(i) * m + j].data(),
                                  fcols[j].data(), acc.data(), len);
        }
        fft::backward(acc.data(), row.data(), len);
        for (int a = 0; a < n; ++a) {
            out[static_cast<std::size_t>(i) * n + a] = scale * row[a];
        }
    }
    return out;
}

// M * (W 1_N), the per-block factor of (B o (x x^H)) x.
std::vector<double> b_row_sums(const spectral::SpectrumVector& w_spectrum, int m) {
    const std::size_t n = static_cast<std::size_t>(w_spectrum.length_l);
    const std::vector<cplx> ones(n, cplx{1.0, 0.0});
    const std::vector<cplx> w1 = spectral::toeplitz_matvec(w_spectrum, ones);
    std::vector<double> p(n);
    for (std::size_t a = 0; a < n; ++a) {
        p[a] = static_cast<double>(m) * w1[a].real();
    }
    return p;
}

class WecorrEngine {
public:
    WecorrEngine(int n, int m, const WeightProfile& w)
        : n_(n),
          m_(m),
          w_(w),
          wmask_(weight_mask(w, n)),
          precomp_(wecorr_precompute(w, n, m)),
          p_(b_row_sums(precomp_.w_spectrum, m)) {}

    const WecorrPrecomp& precomp() const { return precomp_; }

    SequenceSet step(const SequenceSet& x, double* objective_before, WecorrStepInfo* info) {
        const CorrelationTable table = corr::correlation_table_fft(x);
        return step_with_table(x, table, objective_before, info);
    }

    SequenceSet step_with_table(const SequenceSet& x, const CorrelationTable& table,
                                double* objective_before, WecorrStepInfo* info) {
        const double obj = corr::weighted_psi_from_table(table, w_);
        if (objective_before != nullptr) {
            *objective_before = obj;
        }

        const double r_inf = spectral::r_infinity_norm(table, w_);
        const double denom = r_inf - precomp_.lambda_b;
        if (info != nullptr) {
            info->objective_before = obj;
            info->r_inf_norm = r_inf;
            info->denominator = denom;
            info->degenerate = denom <= kDegenerateDenominator;
        }
        if (denom <= kDegenerateDenominator) {
            return x;
        }

        const auto fcols = column_spectra(x);
        const auto chats = lag_spectra(table, wmask_);
        std::vector<cplx> rx = rx_from_spectra(chats, fcols, n_, m_);

        // y = (R x - p o x) / denom - x, with p constant across blocks.
        const std::size_t nm = static_cast<std::size_t>(n_) * m_;
        std::vector<cplx> y(nm);
        const auto xs = x.stacked();
        for (int j = 0; j < m_; ++j) {
            for (int a = 0; a < n_; ++a) {
                const std::size_t idx = static_cast<std::size_t>(j) * n_ + a;
                y[idx] = (rx[idx] - p_[a] * xs[idx]) / denom - xs[idx];
            }
        }
        std::vector<cplx> next(nm);
        kernels::phase_project_neg(y.data(), next.data(), nm);
        return SequenceSet(n_, m_, std::move(next));
    }

    double objective(const SequenceSet& x) const {
        return corr::weighted_psi_from_table(corr::correlation_table_fft(x), w_);
    }

private:
    int n_;
    int m_;
    WeightProfile w_;
    std::vector<double> wmask_;
    WecorrPrecomp precomp_;
    std::vector<double> p_;
};

}  // namespace

WecorrPrecomp wecorr_precompute(const WeightProfile& w, int n, int m) {
    if (w.n() != n) {
        throw std::invalid_argument("weight profile length must equal n");
    }
    WecorrPrecomp out;
    out.w_spectrum.length_l = n;
    out.w_spectrum.values = fft::forward(spectral::w_embedding_column(w, n));
    out.lambda_b = spectral::lambda_b(spectral::lambda_w(w, n), m);
    return out;
}

std::vector<cplx> block_rx(const CorrelationTable& table, const WeightProfile& w,
                           const SequenceSet& x) {
    if (table.n() != x.n() || table.m() != x.m()) {
        throw std::invalid_argument("correlation table does not match the sequence set");
    }
    const auto wmask = weight_mask(w, x.n());
    const auto fcols = column_spectra(x);
    const auto chats = lag_spectra(table, wmask);
    return rx_from_spectra(chats, fcols, x.n(), x.m());
}

std::vector<cplx> b_hadamard_x(const spectral::SpectrumVector& w_spectrum, const SequenceSet& x) {
    if (w_spectrum.length_l != x.n()) {
        throw std::invalid_argument("spectrum length does not match the sequence set");
    }
    const std::vector<double> p = b_row_sums(w_spectrum, x.m());
    std::vector<cplx> out(static_cast<std::size_t>(x.n()) * x.m());
    const auto xs = x.stacked();
    for (int j = 0; j < x.m(); ++j) {
        for (int a = 0; a < x.n(); ++a) {
            const std::size_t idx = static_cast<std::size_t>(j) * x.n() + a;
            out[idx] = p[a] * xs[idx];
        }
    }
    return out;
}

WecorrState wecorr_make_state(SequenceSet x, const WeightProfile& w) {
    WecorrState state;
    state.table = corr::correlation_table_fft(x);
    state.objective = corr::weighted_psi_from_table(state.table, w);
    state.x = std::move(x);
    state.iteration = 0;
    return state;
}

WecorrState wecorr_iterate(const WecorrState& state, const WeightProfile& w,
                           const WecorrPrecomp& precomp, WecorrStepInfo* info) {
    if (precomp.w_spectrum.length_l != state.x.n()) {
        throw std::invalid_argument("precomputed spectrum does not match the state");
    }
    WecorrEngine engine(state.x.n(), state.x.m(), w);
    WecorrStepInfo local;
    SequenceSet next = engine.step_with_table(state.x, state.table, nullptr, &local);
    if (info != nullptr) {
        *info = local;
    }
    if (local.degenerate) {
        return state;
    }
    WecorrState out;
    out.table = corr::correlation_table_fft(next);
    out.objective = corr::weighted_psi_from_table(out.table, w);
    out.x = std::move(next);
    out.iteration = state.iteration + 1;
    return out;
}

std::pair<SequenceSet, SolverReport> design_wecorr(int n, int m, const WeightProfile& w,
                                                   const SolverConfig& config) {
    if (n < 2 || m < 1) {
        throw std::invalid_argument("design_wecorr requires n >= 2 and m >= 1");
    }
    if (w.n() != n) {
        throw std::invalid_argument("weight profile length must equal n");
    }
    // With unit weights the objective is psi, whose floor is known.
    const bool unit_weights =
        std::all_of(w.values().begin(), w.values().end(), [](double v) { return v == 1.0; });
    const std::optional<double> bound =
        unit_weights ? std::optional<double>(corr::psi_lower_bound(n, m)) : std::nullopt;
    return detail::run_trials(
        [&](std::uint64_t seed) {
            WecorrEngine engine(n, m, w);
            detail::StepFn step = [&engine](const SequenceSet& x, double* obj) {
                return engine.step(x, obj, nullptr);
            };
            detail::ObjectiveFn objective = [&engine](const SequenceSet& x) {
                return engine.objective(x);
            };
            return detail::run_single(step, objective, SequenceSet::random(n, m, seed), config,
                                      bound);
        },
        config);
}

}  // namespace seqmm::solver
