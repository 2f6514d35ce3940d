#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqmm/types.hpp"

// File formats owned by the CLI: phase-encoded sequence sets (JSON), weight
// profiles (CSV, one value per line, k = 0 first), correlation-level exports
// (CSV) and run reports (JSON). Phases are stored rather than re/im so that
// unimodularity is exact by construction.
namespace seqmm::io {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_sequence_set(const std::filesystem::path& path, const SequenceSet& x);
SequenceSet read_sequence_set(const std::filesystem::path& path);

WeightProfile read_weights_csv(const std::filesystem::path& path, int expected_n);

/// level rows for lags -(n-1)..n-1; header "lag,level_db".
void write_levels_csv(const std::filesystem::path& path, std::span<const double> levels, int n);

/// all-pairs export; header "lag,i,j,level_db" with 1-based pair indices.
struct PairLevels {
    int i = 0;  // 1-based
    int j = 0;
    std::vector<double> levels;
};
void write_levels_csv_all(const std::filesystem::path& path,
                          std::span<const PairLevels> pairs, int n);

struct RunSummary {
    std::string kind;
    int n = 0;
    int m = 0;
    SolverConfig config;
    SolverReport report;
};
void write_report_json(const std::filesystem::path& path, const RunSummary& summary);

}  // namespace seqmm::io
