#include "seqmm/runner.hpp"

#include <cmath>
#include <iomanip>

#include "seqmm/corr.hpp"
#include "seqmm/io.hpp"
#include "seqmm/solver_corr.hpp"
#include "seqmm/solver_css.hpp"
#include "seqmm/solver_wecorr.hpp"

namespace seqmm::runner {

namespace {

WeightProfile resolve_weights(const DesignArgs& args) {
    if (args.weights_file && args.zcz) {
        throw std::invalid_argument("give either --weights or --zcz, not both");
    }
    if (args.weights_file) {
        return io::read_weights_csv(*args.weights_file, args.n);
    }
    if (args.zcz) {
        return WeightProfile::zero_correlation_zone(args.n, args.zcz->first, args.zcz->second);
    }
    throw std::invalid_argument("wecorr needs a weight source: --weights <file> or --zcz a:b");
}

}  // namespace

SolverReport run_design(const DesignArgs& args, std::ostream& out) {
    args.config.validate();
    std::pair<SequenceSet, SolverReport> result;
    if (args.kind == "css") {
        if (args.weights_file || args.zcz) {
            throw std::invalid_argument("weights apply to wecorr only");
        }
        result = solver::design_css(args.n, args.m, args.config);
    } else if (args.kind == "corr") {
        if (args.weights_file || args.zcz) {
            throw std::invalid_argument("weights apply to wecorr only");
        }
        result = solver::design_corr(args.n, args.m, args.config);
    } else if (args.kind == "wecorr") {
        result = solver::design_wecorr(args.n, args.m, resolve_weights(args), args.config);
    } else {
        throw std::invalid_argument("unknown design kind: " + args.kind);
    }

    io::write_sequence_set(args.out_path, result.first);
    io::write_report_json(args.report_path,
                          {args.kind, args.n, args.m, args.config, result.second});

    out << args.kind << " n=" << args.n << " m=" << args.m
        << " trials=" << args.config.trials << std::setprecision(15)
        << " best_objective=" << result.second.final_objective
        << " iterations=" << result.second.iterations
        << " wall_time_s=" << result.second.wall_time_s << "\n";
    return result.second;
}

void run_metrics(const std::string& input_path, std::ostream& out) {
    const SequenceSet x = io::read_sequence_set(input_path);
    x.validate(1e-9);
    const CorrelationTable table = corr::correlation_table_fft(x);
    const double cisl = corr::cisl_from_table(table);
    const double psi = corr::psi_from_table(table);
    const double bound = corr::psi_lower_bound(x.n(), x.m());

    out << std::setprecision(15);
    out << "n: " << x.n() << "\n";
    out << "m: " << x.m() << "\n";
    out << "cisl: " << cisl << "\n";
    out << "psi: " << psi << "\n";
    out << "psi_lower_bound: " << bound << "\n";
    out << "psi_gap: " << psi - bound << "\n";
    for (int m = 0; m < x.m(); ++m) {
        double peak = 0.0;
        for (int k = 1; k < x.n(); ++k) {
            peak = std::max(peak, std::abs(table.r(m, m, k)));
        }
        const double db = peak < 1e-16 * x.n() ? corr::kDbFloor
                                               : 20.0 * std::log10(peak / x.n());
        out << "peak_autocorrelation_sidelobe[" << m + 1 << "]: " << peak << " (" << db
            << " dB)\n";
    }
}

void run_export(const ExportArgs& args) {
    const SequenceSet x = io::read_sequence_set(args.input_path);
    x.validate(1e-9);
    if (args.mode == "complementary") {
        io::write_levels_csv(args.out_path, corr::complementary_level_db(x), x.n());
    } else if (args.mode == "pair") {
        if (args.i < 1 || args.i > x.m() || args.j < 1 || args.j > x.m()) {
            throw std::invalid_argument("pair indices must lie in 1..m");
        }
        io::write_levels_csv(args.out_path, corr::correlation_level_db(x, args.i - 1, args.j - 1),
                             x.n());
    } else if (args.mode == "all") {
        const CorrelationTable table = corr::correlation_table_fft(x);
        std::vector<io::PairLevels> pairs;
        for (int i = 0; i < x.m(); ++i) {
            for (int j = 0; j < x.m(); ++j) {
                pairs.push_back({i + 1, j + 1, corr::correlation_level_db(table, i, j)});
            }
        }
        io::write_levels_csv_all(args.out_path, pairs, x.n());
    } else {
        throw std::invalid_argument("unknown export mode: " + args.mode);
    }
}

}  // namespace seqmm::runner
