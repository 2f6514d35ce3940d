#pragma once

#include <span>
#include <vector>

#include "seqmm/types.hpp"

// Aperiodic correlations r_{i,j}(k) = sum_n x_i(n+k) conj(x_j(n)) and the
// scalar objectives built from them. Indices i, j are 0-based here.
namespace seqmm::corr {

/// Levels below this magnitude threshold (relative to n) are clamped in the
/// dB exports so CSV output stays finite.
inline constexpr double kDbFloor = -320.0;

/// O(n^2) reference path. Returns the 2n-1 lags k = -(n-1)..n-1 of pair
/// (i, j), lag k stored at position k + n - 1.
std::vector<cplx> cross_correlation_direct(const SequenceSet& x, int i, int j);

/// All pairs via zero-padded 2n-point transforms; pairs (j, i) with j > i are
/// filled from the Hermitian lag symmetry, so r(i,j,k) == conj(r(j,i,-k))
/// holds exactly.
CorrelationTable correlation_table_fft(const SequenceSet& x);

/// Energy of the summed autocorrelations at nonzero positive lags.
double cisl(const SequenceSet& x);
double cisl_from_table(const CorrelationTable& table);

/// Total auto-sidelobe plus cross-correlation energy.
double psi(const SequenceSet& x);
double psi_from_table(const CorrelationTable& table);

/// Lag-weighted variant; equals psi when all weights are 1.
double weighted_psi(const SequenceSet& x, const WeightProfile& w);
double weighted_psi_from_table(const CorrelationTable& table, const WeightProfile& w);

/// N^2 M (M-1), the floor of psi over unimodular sets.
double psi_lower_bound(long n, long m);

/// 20 log10(|sum_m r_mm(k)| / sum_m r_mm(0)) per lag k = -(n-1)..n-1.
std::vector<double> complementary_level_db(const SequenceSet& x);

/// 20 log10(|r_ij(k)| / n) per lag.
std::vector<double> correlation_level_db(const SequenceSet& x, int i, int j);
std::vector<double> correlation_level_db(const CorrelationTable& table, int i, int j);

}  // namespace seqmm::corr
