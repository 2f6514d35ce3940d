#include "seqmm/solver_css.hpp"

#include <cmath>
#include <stdexcept>

#include "mm_driver.hpp"
#include "seqmm/fft.hpp"
#include "seqmm/kernels.hpp"

namespace seqmm::solver {

namespace {

// Per-run workspace; one MM step is
//   f = F [z; 0],  r = (1/2L) F^H |f|^2,  c = masked r,  mu = F c,
//   y = ((L-1)MN + lambda_u) z - (1/2L) F_{:,1:L}^H (mu o f),
// followed by the entrywise phase update on the x positions of y.
class CssEngine {
public:
    CssEngine(int n, int m)
        : n_(n),
          m_(m),
          l_(static_cast<std::size_t>(m) * (2 * n - 1)),
          len_(2 * l_),
          pad_(len_),
          f_(len_),
          power_(len_),
          r_(len_),
          c_(len_),
          mu_(len_),
          prod_(len_),
          y_(l_) {}

    SequenceSet step(const SequenceSet& x, double* objective_before, double* lambda_u_out) {
        const std::vector<cplx> z = css_zero_padded(x);
        std::fill(pad_.begin(), pad_.end(), cplx{0.0, 0.0});
        std::copy(z.begin(), z.end(), pad_.begin());
        fft::forward(pad_.data(), f_.data(), len_);

        kernels::mag_squared(f_.data(), power_.data(), len_);
        for (std::size_t i = 0; i < len_; ++i) {
            c_[i] = cplx{power_[i], 0.0};
        }
        fft::backward(c_.data(), r_.data(), len_);

        const double scale = 1.0 / static_cast<double>(len_);
        double cisl_now = 0.0;
        std::fill(c_.begin(), c_.end(), cplx{0.0, 0.0});
        for (int k = 1; k < n_; ++k) {
            const cplx fwd_lag = scale * r_[k];
            const cplx bwd_lag = scale * r_[len_ - k];
            c_[k] = fwd_lag;
            c_[len_ - k] = bwd_lag;
            cisl_now += std::norm(fwd_lag);
        }
        if (objective_before != nullptr) {
            *objective_before = cisl_now;
        }

        fft::forward(c_.data(), mu_.data(), len_);
        const auto mm = kernels::minmax_even_odd_re(mu_.data(), len_);
        const double lambda_u = 0.5 * (mm.max_even + mm.max_odd);
        if (lambda_u_out != nullptr) {
            *lambda_u_out = lambda_u;
        }

        kernels::hadamard(mu_.data(), f_.data(), prod_.data(), len_);
        fft::backward(prod_.data(), pad_.data(), len_);
        const double alpha =
            (static_cast<double>(l_) - 1.0) * m_ * n_ + lambda_u;
        kernels::axpby(alpha, z.data(), -scale, pad_.data(), y_.data(), l_);

        SequenceSet next = x;
        const int block = 2 * n_ - 1;
        for (int j = 0; j < m_; ++j) {
            kernels::phase_project(y_.data() + static_cast<std::size_t>(j) * block,
                                   next.column(j).data(), static_cast<std::size_t>(n_));
        }
        return next;
    }

    // CISL via the summed per-sequence autocorrelations (m+1 transforms of 2n).
    double objective(const SequenceSet& x) {
        const std::size_t len = 2 * static_cast<std::size_t>(n_);
        std::vector<cplx> pad(len, cplx{0.0, 0.0});
        std::vector<cplx> spec(len);
        std::vector<double> power(len, 0.0);
        for (int j = 0; j < m_; ++j) {
            std::fill(pad.begin() + n_, pad.end(), cplx{0.0, 0.0});
            std::copy(x.column(j).begin(), x.column(j).end(), pad.begin());
            fft::forward(pad.data(), spec.data(), len);
            kernels::mag_squared_add(spec.data(), power.data(), len);
        }
        for (std::size_t i = 0; i < len; ++i) {
            pad[i] = cplx{power[i], 0.0};
        }
        fft::backward(pad.data(), spec.data(), len);
        const double scale = 1.0 / static_cast<double>(len);
        double acc = 0.0;
        for (int k = 1; k < n_; ++k) {
            acc += std::norm(scale * spec[k]);
        }
        return acc;
    }

private:
    int n_;
    int m_;
    std::size_t l_;
    std::size_t len_;
    std::vector<cplx> pad_, f_;
    std::vector<double> power_;
    std::vector<cplx> r_, c_, mu_, prod_, y_;
};

}  // namespace

std::vector<cplx> css_zero_padded(const SequenceSet& x) {
    const int n = x.n();
    const int block = 2 * n - 1;
    std::vector<cplx> z(static_cast<std::size_t>(x.m()) * block, cplx{0.0, 0.0});
    for (int j = 0; j < x.m(); ++j) {
        std::copy(x.column(j).begin(), x.column(j).end(),
                  z.begin() + static_cast<std::size_t>(j) * block);
    }
    return z;
}

std::vector<cplx> css_autocorrelation(std::span<const cplx> z) {
    const std::size_t l = z.size();
    if (l == 0) {
        throw std::invalid_argument("css_autocorrelation requires a nonempty sequence");
    }
    const std::size_t len = 2 * l;
    std::vector<cplx> pad(len, cplx{0.0, 0.0});
    std::copy(z.begin(), z.end(), pad.begin());
    std::vector<cplx> f(len);
    fft::forward(pad.data(), f.data(), len);
    std::vector<double> power(len);
    kernels::mag_squared(f.data(), power.data(), len);
    for (std::size_t i = 0; i < len; ++i) {
        pad[i] = cplx{power[i], 0.0};
    }
    fft::backward(pad.data(), f.data(), len);
    const double scale = 1.0 / static_cast<double>(len);
    for (cplx& v : f) {
        v *= scale;
    }
    return f;
}

CssState css_make_state(SequenceSet x) {
    CssState state;
    CssEngine engine(x.n(), x.m());
    state.objective = engine.objective(x);
    state.z = css_zero_padded(x);
    state.x = std::move(x);
    state.iteration = 0;
    return state;
}

CssState css_iterate(const CssState& state, CssStepInfo* info) {
    CssEngine engine(state.x.n(), state.x.m());
    double obj_before = 0.0;
    double lambda_u = 0.0;
    SequenceSet next = engine.step(state.x, &obj_before, &lambda_u);
    if (info != nullptr) {
        info->objective_before = obj_before;
        info->lambda_u = lambda_u;
    }
    CssState out;
    out.objective = engine.objective(next);
    out.z = css_zero_padded(next);
    out.x = std::move(next);
    out.iteration = state.iteration + 1;
    return out;
}

std::pair<SequenceSet, SolverReport> design_css(int n, int m, const SolverConfig& config) {
    if (n < 2 || m < 1) {
        throw std::invalid_argument("design_css requires n >= 2 and m >= 1");
    }
    return detail::run_trials(
        [&](std::uint64_t seed) {
            CssEngine engine(n, m);
            detail::StepFn step = [&engine](const SequenceSet& x, double* obj) {
                return engine.step(x, obj, nullptr);
            };
            detail::ObjectiveFn objective = [&engine](const SequenceSet& x) {
                return engine.objective(x);
            };
            return detail::run_single(step, objective, SequenceSet::random(n, m, seed), config,
                                      std::nullopt);
        },
        config);
}

}  // namespace seqmm::solver
