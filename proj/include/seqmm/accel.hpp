#pragma once

#include <functional>
#include <span>
#include <vector>

#include "seqmm/types.hpp"

// Squared-iterative (SQUAREM-style) extrapolation of a monotone MM map over
// unimodular vectors, with a backtracking safeguard that preserves the
// descent property. The wrapped map must not increase the objective and must
// return unimodular vectors.
namespace seqmm::accel {

struct AccelConfig {
    bool enabled = true;
    int max_backtracks = 10;
    double step_floor = -1.0;  // extrapolation factor is clamped to <= step_floor
};

struct AccelResult {
    std::vector<cplx> x;
    double objective = 0.0;  // objective at x
    long mm_evals = 0;       // mm_map invocations consumed by this step
};

using MmMap = std::function<std::vector<cplx>(std::span<const cplx>)>;
using Objective = std::function<double(std::span<const cplx>)>;

/// One accelerated step. Guarantees objective(result) <= objective of two
/// plain mm_map applications from x. With max_backtracks <= 0 the
/// extrapolation is skipped entirely and the result is the plain two-step
/// point.
AccelResult accel_step(std::span<const cplx> x, const MmMap& mm_map, const Objective& objective,
                       const AccelConfig& config = {});

}  // namespace seqmm::accel
