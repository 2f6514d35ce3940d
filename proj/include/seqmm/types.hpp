#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace seqmm {

using cplx = std::complex<double>;

/// Thrown when a solver produces a non-finite objective.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A set of m unit-modulus sequences of length n, stored column-major so
/// that column j (sequence j) is contiguous. The column-major layout also
/// makes entries() the stacked vector [x_1^T, ..., x_M^T]^T directly.
class SequenceSet {
public:
    SequenceSet() = default;
    SequenceSet(int n, int m, std::vector<cplx> entries);

    static SequenceSet from_phases(int n, int m, std::span<const double> phases);
    static SequenceSet random(int n, int m, std::uint64_t seed);

    int n() const { return n_; }
    int m() const { return m_; }
    int size() const { return n_ * m_; }

    cplx& at(int i, int j) { return entries_[static_cast<std::size_t>(j) * n_ + i]; }
    const cplx& at(int i, int j) const { return entries_[static_cast<std::size_t>(j) * n_ + i]; }

    std::span<const cplx> column(int j) const {
        return {entries_.data() + static_cast<std::size_t>(j) * n_, static_cast<std::size_t>(n_)};
    }
    std::span<cplx> column(int j) {
        return {entries_.data() + static_cast<std::size_t>(j) * n_, static_cast<std::size_t>(n_)};
    }

    /// Stacked view [x_1; x_2; ...; x_M] of length n*m.
    std::span<const cplx> stacked() const { return entries_; }
    std::span<cplx> stacked() { return entries_; }

    std::vector<double> phases() const;

    /// Max deviation of |entry| from 1.
    double unimodularity_error() const;
    void validate(double tol = 1e-12) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<cplx> entries_;
};

/// All aperiodic correlations r(i, j, k) of a sequence set,
/// i,j in [0, m), k in [-(n-1), n-1], stored dense.
class CorrelationTable {
public:
    CorrelationTable() = default;
    CorrelationTable(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }

    cplx& r(int i, int j, int k) { return values_[index(i, j, k)]; }
    const cplx& r(int i, int j, int k) const { return values_[index(i, j, k)]; }

    /// Lags of pair (i, j) as a contiguous run of 2n-1 values, k = -(n-1)..n-1.
    std::span<const cplx> pair(int i, int j) const {
        return {values_.data() + index(i, j, 1 - n_), static_cast<std::size_t>(2 * n_ - 1)};
    }
    std::span<cplx> pair(int i, int j) {
        return {values_.data() + index(i, j, 1 - n_), static_cast<std::size_t>(2 * n_ - 1)};
    }

private:
    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * m_ + j) * (2 * n_ - 1) + (k + n_ - 1);
    }

    int m_ = 0;
    int n_ = 0;
    std::vector<cplx> values_;
};

/// Nonnegative per-lag weights w_0..w_{n-1}; w_{-k} = w_k is implied.
class WeightProfile {
public:
    WeightProfile() = default;
    explicit WeightProfile(std::vector<double> weights);

    static WeightProfile ones(int n);
    static WeightProfile zeros(int n);
    /// w_k = 1 for k in [lag_begin, lag_end] (inclusive), 0 elsewhere.
    static WeightProfile zero_correlation_zone(int n, int lag_begin, int lag_end);

    int n() const { return static_cast<int>(weights_.size()); }
    double operator[](int k) const { return weights_[k]; }
    std::span<const double> values() const { return weights_; }

private:
    std::vector<double> weights_;
};

struct SolverConfig {
    double tol = 1e-15;       // relative objective-change stopping threshold
    long max_iter = 100000;   // accepted-iterate cap
    std::optional<double> time_limit_s;
    std::optional<double> objective_floor;  // stop once objective <= floor
    std::uint64_t seed = 0;
    bool accel = true;
    int trials = 1;

    void validate() const;
};

struct SolverReport {
    double final_objective = 0.0;
    std::optional<double> lower_bound;
    long iterations = 0;
    long mm_map_evals = 0;
    double wall_time_s = 0.0;
    std::vector<std::pair<long, double>> objective_trace;
    std::vector<double> trial_objectives;  // final objective of every trial, in trial order
};

}  // namespace seqmm
