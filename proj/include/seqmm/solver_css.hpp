#pragma once

#include <span>
#include <utility>
#include <vector>

#include "seqmm/types.hpp"

// Complementary-set design: minimizes the CISL of a set by running the
// weighted-ISL MM iteration on the zero-padded auxiliary sequence
// z = [x_1; 0_{n-1}; ...; x_M; 0_{n-1}] of length L = M(2n-1), whose
// autocorrelations at lags 1..n-1 equal the summed autocorrelations of the
// set. Each step costs four 2L-point transforms.
namespace seqmm::solver {

struct CssState {
    SequenceSet x;
    std::vector<cplx> z;     // zero-padded stacking, length m(2n-1)
    double objective = 0.0;  // CISL at x
    long iteration = 0;
};

struct CssStepInfo {
    double lambda_u = 0.0;           // spectral bound used by the second majorization
    double objective_before = 0.0;   // CISL of the input state
};

/// z = [x_1; 0_{n-1}; ...; x_M; 0_{n-1}].
std::vector<cplx> css_zero_padded(const SequenceSet& x);

/// Circulant-layout autocorrelation of z: the 2L-vector
/// [r_z(0), ..., r_z(L-1), 0, r_z(1-L), ..., r_z(-1)].
std::vector<cplx> css_autocorrelation(std::span<const cplx> z);

CssState css_make_state(SequenceSet x);

/// One full MM step. The CISL of the result never exceeds that of the input
/// (up to roundoff).
CssState css_iterate(const CssState& state, CssStepInfo* info = nullptr);

std::pair<SequenceSet, SolverReport> design_css(int n, int m, const SolverConfig& config);

}  // namespace seqmm::solver
