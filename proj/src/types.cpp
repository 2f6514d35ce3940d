#include "seqmm/types.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace seqmm {

SequenceSet::SequenceSet(int n, int m, std::vector<cplx> entries)
    : n_(n), m_(m), entries_(std::move(entries)) {
    if (n_ < 1 || m_ < 1) {
        throw std::invalid_argument("sequence set requires n >= 1 and m >= 1");
    }
    if (entries_.size() != static_cast<std::size_t>(n_) * m_) {
        throw std::invalid_argument("sequence set entry count does not match n*m");
    }
}

SequenceSet SequenceSet::from_phases(int n, int m, std::span<const double> phases) {
    if (phases.size() != static_cast<std::size_t>(n) * m) {
        throw std::invalid_argument("phase count does not match n*m");
    }
    std::vector<cplx> entries(phases.size());
    for (std::size_t i = 0; i < phases.size(); ++i) {
        entries[i] = std::polar(1.0, phases[i]);
    }
    return SequenceSet(n, m, std::move(entries));
}

SequenceSet SequenceSet::random(int n, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> phases(static_cast<std::size_t>(n) * m);
    for (double& p : phases) {
        // Top 53 bits mapped to [0, 1); platform-independent unlike
        // std::uniform_real_distribution.
        p = two_pi * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    }
    return from_phases(n, m, phases);
}

std::vector<double> SequenceSet::phases() const {
    std::vector<double> out(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out[i] = std::arg(entries_[i]);
    }
    return out;
}

double SequenceSet::unimodularity_error() const {
    double worst = 0.0;
    for (const cplx& e : entries_) {
        worst = std::max(worst, std::abs(std::abs(e) - 1.0));
    }
    return worst;
}

void SequenceSet::validate(double tol) const {
    if (unimodularity_error() > tol) {
        throw std::invalid_argument("sequence set entries are not unit modulus");
    }
}

CorrelationTable::CorrelationTable(int m, int n)
    : m_(m), n_(n), values_(static_cast<std::size_t>(m) * m * (2 * n - 1)) {
    if (m < 1 || n < 1) {
        throw std::invalid_argument("correlation table requires m >= 1 and n >= 1");
    }
}

WeightProfile::WeightProfile(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw std::invalid_argument("weight profile must have at least one lag");
    }
    for (double w : weights_) {
        if (!(w >= 0.0)) {
            throw std::invalid_argument("lag weights must be nonnegative");
        }
    }
}

WeightProfile WeightProfile::ones(int n) {
    return WeightProfile(std::vector<double>(static_cast<std::size_t>(n), 1.0));
}

WeightProfile WeightProfile::zeros(int n) {
    return WeightProfile(std::vector<double>(static_cast<std::size_t>(n), 0.0));
}

WeightProfile WeightProfile::zero_correlation_zone(int n, int lag_begin, int lag_end) {
    if (lag_begin < 1 || lag_end > n - 1 || lag_begin > lag_end) {
        throw std::invalid_argument("zero correlation zone must satisfy 1 <= a <= b <= n-1");
    }
    std::vector<double> w(static_cast<std::size_t>(n), 0.0);
    for (int k = lag_begin; k <= lag_end; ++k) {
        w[k] = 1.0;
    }
    return WeightProfile(std::move(w));
}

void SolverConfig::validate() const {
    if (!(tol >= 0.0)) {
        throw std::invalid_argument("tol must be nonnegative");
    }
    if (max_iter <= 0) {
        throw std::invalid_argument("max_iter must be positive");
    }
    if (time_limit_s && !(*time_limit_s > 0.0)) {
        throw std::invalid_argument("time limit must be positive");
    }
    if (trials < 1) {
        throw std::invalid_argument("trials must be >= 1");
    }
}

}  // namespace seqmm
