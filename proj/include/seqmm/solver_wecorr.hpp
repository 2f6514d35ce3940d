#pragma once

#include <utility>
#include <vector>

#include "seqmm/types.hpp"
#include "seqmm/spectral.hpp"

// Weighted auto/cross-correlation design over the stacked vector
// x = [x_1; ...; x_M]. Each step forms the correlation table, applies the
// block-Toeplitz product R x through per-block circulant spectra, bounds the
// curvature by ||R||_inf - lambda_B, and solves the linearized subproblem in
// closed form as an entrywise phase update.
namespace seqmm::solver {

struct WecorrPrecomp {
    double lambda_b = 0.0;                    // lower bound on lambda_min(1 kron W)
    spectral::SpectrumVector w_spectrum;      // spectrum diagonalizing W
};

struct WecorrState {
    SequenceSet x;
    CorrelationTable table;  // correlations of x
    double objective = 0.0;  // weighted psi at x
    long iteration = 0;
};

struct WecorrStepInfo {
    double objective_before = 0.0;
    double r_inf_norm = 0.0;
    double denominator = 0.0;  // ||R||_inf - lambda_B
    bool degenerate = false;   // denominator vanished; state returned unchanged
};

/// Loop-invariant quantities of a run: lambda_B and the W spectrum.
WecorrPrecomp wecorr_precompute(const WeightProfile& w, int n, int m);

/// R x with Toeplitz blocks R_ij = sum_k w_k r_ij(-k) U_k, via circulant
/// spectra. table must hold the correlations of x.
std::vector<cplx> block_rx(const CorrelationTable& table, const WeightProfile& w,
                           const SequenceSet& x);

/// (B o (x x^H)) x = (M 1_M kron (W 1_N)) o x, with W 1_N computed through
/// the spectrum.
std::vector<cplx> b_hadamard_x(const spectral::SpectrumVector& w_spectrum, const SequenceSet& x);

WecorrState wecorr_make_state(SequenceSet x, const WeightProfile& w);

/// One MM step; the weighted psi of the result never exceeds that of the
/// input. With an all-zero weight profile the denominator vanishes and the
/// state is returned unchanged.
WecorrState wecorr_iterate(const WecorrState& state, const WeightProfile& w,
                           const WecorrPrecomp& precomp, WecorrStepInfo* info = nullptr);

std::pair<SequenceSet, SolverReport> design_wecorr(int n, int m, const WeightProfile& w,
                                                   const SolverConfig& config);

}  // namespace seqmm::solver
