#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "seqmm/io.hpp"
#include "seqmm/runner.hpp"
#include "seqmm/types.hpp"

// Exit codes: 0 success, 2 usage/input error, 3 numerical failure.
namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::optional<std::pair<int, int>> parse_zcz(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("--zcz expects a:b");
    }
    try {
        const int a = std::stoi(text.substr(0, colon));
        const int b = std::stoi(text.substr(colon + 1));
        return std::make_pair(a, b);
    } catch (const std::exception&) {
        throw std::invalid_argument("--zcz expects integer lags a:b");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unimodular sequence-set design via FFT-based MM solvers"};
    app.require_subcommand(1);

    // design
    auto* design = app.add_subcommand("design", "Design a sequence set");
    std::string kind;
    design->add_option("kind", kind, "Solver: css, corr or wecorr")
        ->required()
        ->check(CLI::IsMember({"css", "corr", "wecorr"}));
    seqmm::runner::DesignArgs dargs;
    design->add_option("--n", dargs.n, "Sequence length")->required()->check(CLI::Range(2, 1 << 20));
    design->add_option("--m", dargs.m, "Number of sequences")->required()->check(CLI::Range(1, 1 << 16));
    design->add_option("--seed", dargs.config.seed, "Base RNG seed (trial t uses seed + t)");
    design->add_option("--tol", dargs.config.tol, "Relative objective-change stopping threshold");
    design->add_option("--max-iter", dargs.config.max_iter, "Iteration cap");
    double time_limit = 0.0;
    auto* tl = design->add_option("--time-limit", time_limit, "Wall-time limit per trial (s)");
    double floor_val = 0.0;
    auto* fl = design->add_option("--objective-floor", floor_val,
                                  "Stop once the objective drops to this value");
    std::string accel_str = "on";
    design->add_option("--accel", accel_str, "Fixed-point acceleration: on or off")
        ->check(CLI::IsMember({"on", "off"}));
    design->add_option("--trials", dargs.config.trials, "Independent seeded starts; best kept");
    std::string weights_file;
    auto* wopt = design->add_option("--weights", weights_file, "Weight CSV (wecorr)");
    std::string zcz_text;
    auto* zopt = design->add_option("--zcz", zcz_text, "Unit weights on lags a:b (wecorr)");
    design->add_option("--out", dargs.out_path, "Sequence-set output file");
    design->add_option("--report", dargs.report_path, "Report output file");

    // metrics
    auto* metrics = app.add_subcommand("metrics", "Print objectives of a stored set");
    std::string metrics_input;
    metrics->add_option("input", metrics_input, "Sequence-set file")->required();

    // export-levels
    auto* exp = app.add_subcommand("export-levels", "Export correlation levels as CSV");
    seqmm::runner::ExportArgs eargs;
    exp->add_option("input", eargs.input_path, "Sequence-set file")->required();
    exp->add_option("--mode", eargs.mode, "complementary, pair or all")
        ->required()
        ->check(CLI::IsMember({"complementary", "pair", "all"}));
    exp->add_option("--i", eargs.i, "Pair row index (1-based)");
    exp->add_option("--j", eargs.j, "Pair column index (1-based)");
    exp->add_option("--out", eargs.out_path, "CSV output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (design->parsed()) {
            dargs.kind = kind;
            dargs.config.accel = accel_str == "on";
            if (*tl) {
                dargs.config.time_limit_s = time_limit;
            }
            if (*fl) {
                dargs.config.objective_floor = floor_val;
            }
            if (*wopt) {
                dargs.weights_file = weights_file;
            }
            if (*zopt) {
                dargs.zcz = parse_zcz(zcz_text);
            }
            seqmm::runner::run_design(dargs, std::cout);
        } else if (metrics->parsed()) {
            seqmm::runner::run_metrics(metrics_input, std::cout);
        } else if (exp->parsed()) {
            seqmm::runner::run_export(eargs);
        }
    } catch (const seqmm::numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
