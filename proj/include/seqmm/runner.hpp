#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "seqmm/types.hpp"

// Command implementations behind the CLI, kept in the library so the file
// outputs and exit semantics can be tested directly.
namespace seqmm::runner {

struct DesignArgs {
    std::string kind;  // css | corr | wecorr
    int n = 0;
    int m = 0;
    SolverConfig config;
    std::optional<std::string> weights_file;            // wecorr only
    std::optional<std::pair<int, int>> zcz;             // wecorr only, inclusive lag range
    std::string out_path = "seqset.json";
    std::string report_path = "report.json";
};

/// Runs the requested design, writes the sequence-set and report files, and
/// prints a one-line summary. Throws std::invalid_argument / io::io_error on
/// bad usage and numerical_error on solver failure.
SolverReport run_design(const DesignArgs& args, std::ostream& out);

/// Prints CISL, psi, the psi lower bound and gap, and per-sequence peak
/// autocorrelation sidelobes for a stored set.
void run_metrics(const std::string& input_path, std::ostream& out);

struct ExportArgs {
    std::string input_path;
    std::string mode;  // complementary | pair | all
    int i = 1;         // 1-based, pair mode
    int j = 1;
    std::string out_path = "levels.csv";
};

void run_export(const ExportArgs& args);

}  // namespace seqmm::runner
