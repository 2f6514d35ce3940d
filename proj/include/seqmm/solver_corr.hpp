#pragma once

#include <utility>
#include <vector>

#include "seqmm/types.hpp"

// Unweighted auto/cross-correlation design through the frequency-domain
// quartic form: with q_p = ||X^H h_p||^2 collected from 2n-point column
// spectra, psi = (1/2n) sum_p q_p^2 - n^2 m, and each step majorizes the
// quartic twice (scalar quadratic per bin, then a linear surrogate) giving
//   Y = 4 H^H Diag(q) H X - 2 lambda_a X
// and the entrywise phase update X = exp(j arg(-Y)). 2M transforms per step.
namespace seqmm::solver {

struct CorrState {
    SequenceSet x;
    std::vector<double> q;   // per-bin set power, length 2n
    double objective = 0.0;  // psi at x
    long iteration = 0;
};

struct CorrStepInfo {
    double objective_before = 0.0;
    double t = 0.0;         // quartic interval endpoint (sum q^2)^{1/4}
    double lambda_a = 0.0;  // bound on lambda_max(H^H Diag(a) H)
    std::vector<double> a;  // per-bin quadratic majorizer curvatures
};

/// Coefficients (a, b) of the quadratic a x^2 + b x + (a x0^2 - 3 x0^4) that
/// dominates x^4 on [0, t] and touches it at x0. Requires 0 <= x0 <= t.
std::pair<double, double> quartic_majorizer_coeffs(double x0, double t);

CorrState corr_make_state(SequenceSet x);

/// One MM step; psi never increases (up to roundoff).
CorrState corr_iterate(const CorrState& state, CorrStepInfo* info = nullptr);

std::pair<SequenceSet, SolverReport> design_corr(int n, int m, const SolverConfig& config);

}  // namespace seqmm::solver
