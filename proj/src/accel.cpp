#include "seqmm/accel.hpp"

#include <cmath>

#include "seqmm/kernels.hpp"

namespace seqmm::accel {

AccelResult accel_step(std::span<const cplx> x, const MmMap& mm_map, const Objective& objective,
                       const AccelConfig& config) {
    AccelResult res;

    std::vector<cplx> x1 = mm_map(x);
    std::vector<cplx> x2 = mm_map(x1);
    res.mm_evals = 2;

    const std::size_t n = x.size();
    std::vector<cplx> r(n);
    std::vector<cplx> v(n);
    kernels::axpby(1.0, x1.data(), -1.0, x.data(), r.data(), n);   // r = x1 - x
    kernels::axpby(1.0, x2.data(), -1.0, x1.data(), v.data(), n);  // v = (x2 - x1) - r
    kernels::axpby(1.0, v.data(), -1.0, r.data(), v.data(), n);

    const double norm_r = std::sqrt(kernels::norm_sq(r.data(), n));
    const double norm_v = std::sqrt(kernels::norm_sq(v.data(), n));
    if (norm_v == 0.0 || config.max_backtracks <= 0) {
        res.objective = objective(x2);
        res.x = std::move(x2);
        return res;
    }

    const double f_x2 = objective(x2);
    double alpha = std::min(-norm_r / norm_v, config.step_floor);

    std::vector<cplx> cand(n);
    std::vector<cplx> tmp(n);
    for (int bt = 0; bt < config.max_backtracks; ++bt) {
        // cand = phase(x - 2 alpha r + alpha^2 v)
        kernels::axpby(1.0, x.data(), -2.0 * alpha, r.data(), tmp.data(), n);
        kernels::axpby(1.0, tmp.data(), alpha * alpha, v.data(), cand.data(), n);
        kernels::phase_project(cand.data(), cand.data(), n);

        std::vector<cplx> x3 = mm_map(cand);
        ++res.mm_evals;
        const double f3 = objective(x3);
        if (f3 <= f_x2) {
            res.objective = f3;
            res.x = std::move(x3);
            return res;
        }
        alpha = (alpha - 1.0) / 2.0;
    }

    res.objective = f_x2;
    res.x = std::move(x2);
    return res;
}

}  // namespace seqmm::accel
