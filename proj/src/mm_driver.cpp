#include "mm_driver.hpp"

#include <chrono>
#include <cmath>

#include "seqmm/accel.hpp"

namespace seqmm::solver::detail {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool converged(double f_now, double f_prev, double tol) {
    return std::abs(f_now - f_prev) <= tol * std::max(1.0, std::abs(f_prev));
}

void check_finite(double f) {
    if (!std::isfinite(f)) {
        throw numerical_error("solver objective became non-finite");
    }
}

std::pair<SequenceSet, SolverReport> run_plain(const StepFn& step, const ObjectiveFn& objective,
                                               SequenceSet x, const SolverConfig& config) {
    const auto t0 = Clock::now();
    SolverReport report;
    double f_prev = 0.0;
    for (long it = 0; it < config.max_iter; ++it) {
        if (config.time_limit_s && seconds_since(t0) > *config.time_limit_s) {
            break;
        }
        double f_at_x = 0.0;
        SequenceSet x_next = step(x, &f_at_x);
        ++report.mm_map_evals;
        ++report.iterations;
        check_finite(f_at_x);
        report.objective_trace.emplace_back(it, f_at_x);
        const bool floor_hit = config.objective_floor && f_at_x <= *config.objective_floor;
        if (floor_hit || (it > 0 && converged(f_at_x, f_prev, config.tol))) {
            report.final_objective = f_at_x;
            report.wall_time_s = seconds_since(t0);
            return {std::move(x), std::move(report)};
        }
        f_prev = f_at_x;
        x = std::move(x_next);
    }
    report.final_objective = objective(x);
    check_finite(report.final_objective);
    report.objective_trace.emplace_back(report.iterations, report.final_objective);
    report.wall_time_s = seconds_since(t0);
    return {std::move(x), std::move(report)};
}

std::pair<SequenceSet, SolverReport> run_accelerated(const StepFn& step,
                                                     const ObjectiveFn& objective, SequenceSet x,
                                                     const SolverConfig& config) {
    const auto t0 = Clock::now();
    const int n = x.n();
    const int m = x.m();

    accel::MmMap map = [&](std::span<const cplx> v) {
        SequenceSet in(n, m, std::vector<cplx>(v.begin(), v.end()));
        double ignored = 0.0;
        const SequenceSet out = step(in, &ignored);
        const auto s = out.stacked();
        return std::vector<cplx>(s.begin(), s.end());
    };
    accel::Objective obj = [&](std::span<const cplx> v) {
        return objective(SequenceSet(n, m, std::vector<cplx>(v.begin(), v.end())));
    };

    SolverReport report;
    double f_prev = objective(x);
    check_finite(f_prev);
    report.objective_trace.emplace_back(0, f_prev);
    report.final_objective = f_prev;
    if (config.objective_floor && f_prev <= *config.objective_floor) {
        report.wall_time_s = seconds_since(t0);
        return {std::move(x), std::move(report)};
    }

    accel::AccelConfig acfg;
    std::vector<cplx> xv(x.stacked().begin(), x.stacked().end());
    for (long it = 1; it <= config.max_iter; ++it) {
        if (config.time_limit_s && seconds_since(t0) > *config.time_limit_s) {
            break;
        }
        accel::AccelResult res = accel::accel_step(xv, map, obj, acfg);
        report.mm_map_evals += res.mm_evals;
        ++report.iterations;
        check_finite(res.objective);
        report.objective_trace.emplace_back(it, res.objective);
        xv = std::move(res.x);
        report.final_objective = res.objective;
        const bool floor_hit = config.objective_floor && res.objective <= *config.objective_floor;
        if (floor_hit || converged(res.objective, f_prev, config.tol)) {
            break;
        }
        f_prev = res.objective;
    }
    report.wall_time_s = seconds_since(t0);
    return {SequenceSet(n, m, std::move(xv)), std::move(report)};
}

}  // namespace

std::pair<SequenceSet, SolverReport> run_single(const StepFn& step, const ObjectiveFn& objective,
                                                SequenceSet x0, const SolverConfig& config,
                                                std::optional<double> lower_bound) {
    config.validate();
    auto result = config.accel ? run_accelerated(step, objective, std::move(x0), config)
                               : run_plain(step, objective, std::move(x0), config);
    result.second.lower_bound = lower_bound;
    return result;
}

std::pair<SequenceSet, SolverReport> run_trials(
    const std::function<std::pair<SequenceSet, SolverReport>(std::uint64_t seed)>& single_run,
    const SolverConfig& config) {
    config.validate();
    std::pair<SequenceSet, SolverReport> best;
    std::vector<double> finals;
    double total_time = 0.0;
    for (int t = 0; t < config.trials; ++t) {
        auto run = single_run(config.seed + static_cast<std::uint64_t>(t));
        finals.push_back(run.second.final_objective);
        total_time += run.second.wall_time_s;
        if (t == 0 || run.second.final_objective < best.second.final_objective) {
            best = std::move(run);
        }
    }
    best.second.trial_objectives = std::move(finals);
    best.second.wall_time_s = total_time;
    return best;
}

}  // namespace seqmm::solver::detail
