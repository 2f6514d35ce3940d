#include "seqmm/solver_corr.hpp"

#include <cmath>
#include <stdexcept>

#include "mm_driver.hpp"
#include "seqmm/corr.hpp"
#include "seqmm/fft.hpp"
#include "seqmm/kernels.hpp"

namespace seqmm::solver {

namespace {

class CorrEngine {
public:
    CorrEngine(int n, int m)
        : n_(n),
          m_(m),
          len_(2 * static_cast<std::size_t>(n)),
          pad_(len_),
          q_(len_),
          a_(len_),
          prod_(len_),
          back_(len_),
          fcols_(static_cast<std::size_t>(m), std::vector<cplx>(len_)) {}

    // q from the column spectra; returns psi at x.
    double load(const SequenceSet& x) {
        std::fill(q_.begin(), q_.end(), 0.0);
        for (int j = 0; j < m_; ++j) {
            std::fill(pad_.begin() + n_, pad_.end(), cplx{0.0, 0.0});
            std::copy(x.column(j).begin(), x.column(j).end(), pad_.begin());
            fft::forward(pad_.data(), fcols_[j].data(), len_);
            kernels::mag_squared_add(fcols_[j].data(), q_.data(), len_);
        }
        const double t4 = kernels::sum_sq(q_.data(), len_);
        return t4 / static_cast<double>(len_) -
               static_cast<double>(n_) * n_ * m_;
    }

    SequenceSet step(const SequenceSet& x, double* objective_before, CorrStepInfo* info) {
        const double obj = load(x);
        if (objective_before != nullptr) {
            *objective_before = obj;
        }
        const double t4 = kernels::sum_sq(q_.data(), len_);
        const double t = std::pow(t4, 0.25);
        for (std::size_t p = 0; p < len_; ++p) {
            a_[p] = t * t + 2.0 * t * std::sqrt(q_[p]) + 3.0 * q_[p];
        }
        const auto mm = kernels::minmax_even_odd(a_.data(), len_);
        const double lambda_a = static_cast<double>(n_) * (mm.max_even + mm.max_odd);
        if (info != nullptr) {
            info->objective_before = obj;
            info->t = t;
            info->lambda_a = lambda_a;
            info->a = a_;
        }

        SequenceSet next = x;
        for (int j = 0; j < m_; ++j) {
            kernels::real_hadamard(q_.data(), fcols_[j].data(), prod_.data(), len_);
            fft::backward(prod_.data(), back_.data(), len_);
            // Y_col = 4 H^H Diag(q) H x_j - 2 lambda_a x_j; backward is F^H,
            // so no 1/2n factor here.
            kernels::axpby(4.0, back_.data(), -2.0 * lambda_a, x.column(j).data(), prod_.data(),
                           static_cast<std::size_t>(n_));
            kernels::phase_project_neg(prod_.data(), next.column(j).data(),
                                       static_cast<std::size_t>(n_));
        }
        return next;
    }

    double objective(const SequenceSet& x) { return load(x); }

    const std::vector<double>& q() const { return q_; }

private:
    int n_;
    int m_;
    std::size_t len_;
    std::vector<cplx> pad_;
    std::vector<double> q_;
    std::vector<double> a_;
    std::vector<cplx> prod_;
    std::vector<cplx> back_;
    std::vector<std::vector<cplx>> fcols_;
};

}  // namespace

std::pair<double, double> quartic_majorizer_coeffs(double x0, double t) {
    if (x0 < 0.0 || t < 0.0) {
        throw std::invalid_argument("quartic majorizer requires nonnegative x0 and t");
    }
    if (x0 > t) {
        throw std::invalid_argument("quartic majorizer requires x0 <= t");
    }
    const double a = t * t + 2.0 * x0 * t + 3.0 * x0 * x0;
    const double b = 4.0 * x0 * x0 * x0 - 2.0 * a * x0;
    return {a, b};
}

CorrState corr_make_state(SequenceSet x) {
    CorrEngine engine(x.n(), x.m());
    CorrState state;
    state.objective = engine.load(x);
    state.q = engine.q();
    state.x = std::move(x);
    state.iteration = 0;
    return state;
}

CorrState corr_iterate(const CorrState& state, CorrStepInfo* info) {
    CorrEngine engine(state.x.n(), state.x.m());
    SequenceSet next = engine.step(state.x, nullptr, info);
    CorrState out;
    out.objective = engine.load(next);
    out.q = engine.q();
    out.x = std::move(next);
    out.iteration = state.iteration + 1;
    return out;
}

std::pair<SequenceSet, SolverReport> design_corr(int n, int m, const SolverConfig& config) {
    if (n < 2 || m < 1) {
        throw std::invalid_argument("design_corr requires n >= 2 and m >= 1");
    }
    const double bound = corr::psi_lower_bound(n, m);
    return detail::run_trials(
        [&](std::uint64_t seed) {
            CorrEngine engine(n, m);
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
