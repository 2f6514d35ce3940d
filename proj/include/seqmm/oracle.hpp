#pragma once

#include <Eigen/Dense>

#include "seqmm/types.hpp"

// Dense reference constructions of the structured matrices the fast paths
// factor through. Test-scale only: every builder enforces a hard size guard
// and none of this is reachable from the solver hot paths.
namespace seqmm::oracle {

using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;

/// U_k: ones where column - row = k, zeros elsewhere; |k| < l.
RealMatrix dense_shift_matrix(long l, long k);

/// The (nm)^2 x (nm)^2 quadratic-form matrix
/// sum_{i,j,k} w_{|k|} vec(S_j^H U_k S_i) vec(S_j^H U_k S_i)^T. Guard: nm <= 64.
RealMatrix dense_L_matrix(const WeightProfile& w, long n, long m);

/// Block matrix with Toeplitz blocks R_ij = sum_k w_{|k|} r_ij(-k) U_k.
/// Guard: nm <= 64.
Matrix dense_R_matrix(const CorrelationTable& table, const WeightProfile& w);

/// 1_{m x m} kron W with W_{ab} = w_{|a-b|} (n - |a-b|). Guard: nm <= 128.
RealMatrix dense_B_matrix(const WeightProfile& w, long n, long m);

/// 2n x n matrix whose rows are h_p^H, h_p = [1, e^{j w_p}, ..., e^{j w_p (n-1)}],
/// w_p = 2 pi (p-1) / (2n). Guard: n <= 256.
Matrix dense_harmonic_matrix(long n);

/// Stacked x = vec(X) as an Eigen vector (test convenience).
Vector stacked_vector(const SequenceSet& x);

}  // namespace seqmm::oracle
