#pragma once

#include <functional>

#include "seqmm/types.hpp"

namespace seqmm::solver::detail {

// One plain MM step. Returns the next iterate and reports the objective of
// the input point (every solver computes it as a byproduct of the step).
using StepFn = std::function<SequenceSet(const SequenceSet&, double* objective_at_input)>;
using ObjectiveFn = std::function<double(const SequenceSet&)>;

// Runs a single seeded solve, plain or SQUAREM-accelerated per config.
// lower_bound, when given, is recorded in the report.
std::pair<SequenceSet, SolverReport> run_single(const StepFn& step, const ObjectiveFn& objective,
                                                SequenceSet x0, const SolverConfig& config,
                                                std::optional<double> lower_bound);

// Runs config.trials independent solves with seeds config.seed + t and keeps
// the best final objective. The returned report is the best run's, extended
// with per-trial objectives and total wall time.
std::pair<SequenceSet, SolverReport> run_trials(
    const std::function<std::pair<SequenceSet, SolverReport>(std::uint64_t seed)>& single_run,
    const SolverConfig& config);

}  // namespace seqmm::solver::detail
