// Acceptance suite: runs every gate end to end and prints one line per
// criterion. Criteria 1-5 exercise the installed CLI binary; 6-9 drive the
// library against dense oracles. Exit code = number of failed criteria.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "seqmm/corr.hpp"
#include "seqmm/io.hpp"
#include "seqmm/oracle.hpp"
#include "seqmm/solver_corr.hpp"
#include "seqmm/solver_css.hpp"
#include "seqmm/solver_wecorr.hpp"
#include "seqmm/spectral.hpp"

using namespace seqmm;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Criterion {
    int id;
    std::string name;
    std::function<bool(std::ostream&)> run;
};

fs::path g_work;

int run_cli(const std::string& args) {
    const std::string cmd = std::string(SEQMM_CLI_PATH) + " " + args + " > /dev/null";
    return std::system(cmd.c_str());
}

json load_json(const fs::path& p) {
    std::ifstream in(p);
    json j;
    in >> j;
    return j;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> csv_levels(const fs::path& p) {
    std::ifstream in(p);
    std::string line;
    std::getline(in, line);  // header
    std::vector<double> levels;
    while (std::getline(in, line)) {
        const auto comma = line.rfind(',');
        levels.push_back(std::stod(line.substr(comma + 1)));
    }
    return levels;
}

bool check(std::ostream& log, bool ok, const std::string& what) {
    log << (ok ? "    ok: " : "    FAILED: ") << what << "\n";
    return ok;
}

// ---------------------------------------------------------------------------

bool criterion1(std::ostream& log) {
    const auto t0 = std::chrono::steady_clock::now();
    const fs::path out = g_work / "c1_set.json";
    const fs::path rep = g_work / "c1_report.json";
    const int rc = run_cli("design corr --n 256 --m 2 --trials 10 --tol 1e-8 --seed 1 --out " +
                           out.string() + " --report " + rep.string());
    const double secs = elapsed_s(t0);
    bool ok = check(log, rc == 0, "CLI exit 0");
    if (!ok) {
        return false;
    }
    const json r = load_json(rep);
    const double best = r["final_objective"].get<double>();
    double avg = r["avg_objective"].get<double>();
    log << "    min psi = " << best << ", avg = " << avg << ", wall = " << secs << " s\n";
    ok &= check(log, best <= 131100.0, "min psi <= 131100");
    ok &= check(log, avg <= 131150.0, "avg psi <= 131150");
    ok &= check(log, secs <= 60.0, "runtime <= 60 s");
    return ok;
}

bool criterion2(std::ostream& log) {
    const auto t0 = std::chrono::steady_clock::now();
    const fs::path out = g_work / "c2_set.json";
    const fs::path rep = g_work / "c2_report.json";
    const int rc = run_cli("design corr --n 256 --m 4 --trials 5 --seed 1 --out " + out.string() +
                           " --report " + rep.string());
    const double secs = elapsed_s(t0);
    bool ok = check(log, rc == 0, "CLI exit 0");
    if (!ok) {
        return false;
    }
    const json r = load_json(rep);
    const double best = r["final_objective"].get<double>();
    log << "    min psi = " << best << ", wall = " << secs << " s\n";
    ok &= check(log, best <= 786450.0, "min psi <= 786450");
    ok &= check(log, secs <= 60.0, "runtime <= 60 s");
    return ok;
}

bool criterion3(std::ostream& log) {
    const auto t0 = std::chrono::steady_clock::now();
    const fs::path out = g_work / "c3_set.json";
    const fs::path rep = g_work / "c3_report.json";
    const int rc = run_cli("design wecorr --n 64 --m 3 --zcz 17:32 --objective-floor 1e-8 --out " +
                           out.string() + " --report " + rep.string());
    const double secs = elapsed_s(t0);
    bool ok = check(log, rc == 0, "CLI exit 0");
    if (!ok) {
        return false;
    }
    const json r = load_json(rep);
    const double final_obj = r["final_objective"].get<double>();
    log << "    weighted objective = " << final_obj << ", wall = " << secs << " s\n";
    ok &= check(log, final_obj <= 1e-8, "weighted objective <= 1e-8");
    ok &= check(log, secs <= 120.0, "runtime <= 120 s");

    bool levels_ok = true;
    for (int i = 1; i <= 3 && levels_ok; ++i) {
        for (int j = i; j <= 3 && levels_ok; ++j) {
            const fs::path csv = g_work / ("c3_levels_" + std::to_string(i) + std::to_string(j) +
                                           ".csv");
            run_cli("export-levels " + out.string() + " --mode pair --i " + std::to_string(i) +
                    " --j " + std::to_string(j) + " --out " + csv.string());
            const auto levels = csv_levels(csv);
            for (int k = 17; k <= 32; ++k) {
                levels_ok &= levels[k + 63] <= -80.0 && levels[-k + 63] <= -80.0;
            }
        }
    }
    ok &= check(log, levels_ok, "suppressed-lag pair levels <= -80 dB");
    return ok;
}

bool criterion4(std::ostream& log) {
    const auto t0 = std::chrono::steady_clock::now();
    const fs::path out3 = g_work / "c4_set_m3.json";
    const fs::path rep3 = g_work / "c4_report_m3.json";
    int rc = run_cli("design css --n 128 --m 3 --tol 1e-15 --seed 1 --out " + out3.string() +
                     " --report " + rep3.string());
    bool ok = check(log, rc == 0, "CLI exit 0 (m=3)");
    const fs::path csv3 = g_work / "c4_levels_m3.csv";
    run_cli("export-levels " + out3.string() + " --mode complementary --out " + csv3.string());
    const auto levels3 = csv_levels(csv3);
    double peak3 = -1e300;
    for (int k = 0; k < 255; ++k) {
        if (k != 127) {
            peak3 = std::max(peak3, levels3[k]);
        }
    }
    const double secs = elapsed_s(t0);
    log << "    m=3 peak complementary level = " << peak3 << " dB, wall = " << secs << " s\n";
    ok &= check(log, peak3 <= -80.0, "m=3 peak level <= -80 dB");
    ok &= check(log, secs <= 300.0, "m=3 runtime <= 300 s");

    const fs::path out1 = g_work / "c4_set_m1.json";
    const fs::path rep1 = g_work / "c4_report_m1.json";
    rc = run_cli("design css --n 128 --m 1 --tol 1e-15 --seed 1 --out " + out1.string() +
                 " --report " + rep1.string());
    ok &= check(log, rc == 0, "CLI exit 0 (m=1)");
    const fs::path csv1 = g_work / "c4_levels_m1.csv";
    run_cli("export-levels " + out1.string() + " --mode complementary --out " + csv1.string());
    const auto levels1 = csv_levels(csv1);
    double peak1 = -1e300;
    for (int k = 0; k < 255; ++k) {
        if (k != 127) {
            peak1 = std::max(peak1, levels1[k]);
        }
    }
    log << "    m=1 peak complementary level = " << peak1 << " dB\n";
    ok &= check(log, peak1 >= -45.0, "m=1 peak level >= -45 dB");
    return ok;
}

bool criterion5(std::ostream& log) {
    const fs::path out = g_work / "c5_set.json";
    const fs::path rep = g_work / "c5_report.json";
    const int rc = run_cli("design css --n 2 --m 2 --seed 1 --out " + out.string() + " --report " +
                           rep.string());
    bool ok = check(log, rc == 0, "CLI exit 0");
    if (!ok) {
        return false;
    }
    const double cisl = load_json(rep)["final_objective"].get<double>();
    log << "    cisl = " << cisl << "\n";
    ok &= check(log, cisl <= 1e-12, "cisl <= 1e-12");
    return ok;
}

// ---------------------------------------------------------------------------

bool criterion6(std::ostream& log) {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(2024);
    auto rand_dim = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    };

    bool fft_ok = true;
    bool rx_ok = true;
    bool bx_ok = true;
    bool circ_ok = true;
    bool psi_ok = true;

    for (int inst = 0; inst < 100; ++inst) {
        const int n = rand_dim(2, 32);
        const int m = rand_dim(1, 4);
        const auto x = SequenceSet::random(n, m, rng());

        // (a) fft vs direct
        const auto table = corr::correlation_table_fft(x);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                const auto direct = corr::cross_correlation_direct(x, i, j);
                for (int k = 1 - n; k < n; ++k) {
                    fft_ok &= std::abs(table.r(i, j, k) - direct[k + n - 1]) <= 1e-9;
                }
            }
        }

        // (b), (c): dense comparisons on sizes inside the oracle guards
        const int ng = rand_dim(2, 32);
        const int mg = rand_dim(1, std::min(4, 64 / ng));
        const auto xg = SequenceSet::random(ng, mg, rng());
        const auto tableg = corr::correlation_table_fft(xg);
        const auto w = [&] {
            std::vector<double> ws(ng);
            for (double& v : ws) {
                v = static_cast<double>(rng() % 1024) / 512.0;
            }
            return WeightProfile(ws);
        }();
        const auto rx = solver::block_rx(tableg, w, xg);
        Eigen::VectorXcd xv = oracle::stacked_vector(xg);
        const Eigen::VectorXcd dense_rx = oracle::dense_R_matrix(tableg, w) * xv;
        const double scale_rx = std::max(1.0, dense_rx.norm());
        for (int i = 0; i < ng * mg; ++i) {
            rx_ok &= std::abs(rx[i] - dense_rx(i)) <= 1e-8 * scale_rx;
        }

        const auto pre = solver::wecorr_precompute(w, ng, mg);
        const auto bx = solver::b_hadamard_x(pre.w_spectrum, xg);
        const Eigen::MatrixXcd b_mat = oracle::dense_B_matrix(w, ng, mg).cast<cplx>();
        const Eigen::VectorXcd dense_bx = b_mat.cwiseProduct(xv * xv.adjoint()) * xv;
        const double scale_bx = std::max(1.0, dense_bx.norm());
        for (int i = 0; i < ng * mg; ++i) {
            bx_ok &= std::abs(bx[i] - dense_bx(i)) <= 1e-8 * scale_bx;
        }

        // (d) circulant reconstruction
        {
            const int l = rand_dim(2, 32);
            std::vector<cplx> col(l);
            std::vector<cplx> anti(l);
            std::uniform_real_distribution<double> dist(-1.0, 1.0);
            for (int i = 0; i < l; ++i) {
                col[i] = {dist(rng), dist(rng)};
                anti[i] = {dist(rng), dist(rng)};
            }
            anti[0] = 0.0;
            const auto spec = spectral::circulant_spectrum(col, anti);
            for (int b = 0; b < l; ++b) {
                std::vector<cplx> e(l, cplx{0, 0});
                e[b] = 1.0;
                const auto out = spectral::toeplitz_matvec(spec, e);
                for (int a = 0; a < l; ++a) {
                    const int k = b - a;
                    const cplx expect = k <= 0 ? col[-k] : anti[l - k];
                    circ_ok &= std::abs(out[a] - expect) <= 1e-10;
                }
            }
        }

        // (e) frequency-domain psi identity
        {
            const auto h = oracle::dense_harmonic_matrix(n);
            Eigen::MatrixXcd xm(n, m);
            for (int j = 0; j < m; ++j) {
                for (int i = 0; i < n; ++i) {
                    xm(i, j) = x.at(i, j);
                }
            }
            const Eigen::MatrixXcd hx = h * xm;
            double quartic = 0.0;
            for (int p = 0; p < 2 * n; ++p) {
                quartic += std::pow(hx.row(p).squaredNorm(), 2);
            }
            const double freq_psi =
                quartic / (2.0 * n) - static_cast<double>(n) * n * m;
            const double lag_psi = corr::psi_from_table(table);
            psi_ok &= std::abs(freq_psi - lag_psi) <= 1e-6 * std::max(1.0, std::abs(lag_psi));
        }
    }

    bool ok = check(log, fft_ok, "fft vs direct correlation (1e-9, 100 instances)");
    ok &= check(log, rx_ok, "block_rx vs dense R x (1e-8)");
    ok &= check(log, bx_ok, "b_hadamard_x vs dense (1e-8)");
    ok &= check(log, circ_ok, "circulant reconstruction (1e-10)");
    ok &= check(log, psi_ok, "frequency-domain psi identity (1e-6 relative)");
    const double secs = elapsed_s(t0);
    log << "    suite time = " << secs << " s\n";
    ok &= check(log, secs <= 120.0, "suite within 120 s");
    return ok;
}

bool criterion7(std::ostream& log) {
    std::mt19937_64 rng(4096);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> nonneg(0.0, 3.0);

    bool sandwich_ok = true;
    for (int inst = 0; inst < 100; ++inst) {
        const int l = std::vector<int>{4, 8, 16, 32}[inst % 4];
        std::vector<cplx> col(l);
        for (auto& v : col) {
            v = {unit(rng), unit(rng)};
        }
        col[0] = {col[0].real(), 0.0};
        Eigen::MatrixXcd t(l, l);
        for (int a = 0; a < l; ++a) {
            for (int b = 0; b < l; ++b) {
                const int k = a - b;
                t(a, b) = k >= 0 ? col[k] : std::conj(col[-k]);
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(t, Eigen::EigenvaluesOnly);
        const auto bounds = spectral::hermitian_toeplitz_eig_bounds(col);
        sandwich_ok &= bounds.lower <= eig.eigenvalues().minCoeff() + 1e-8;
        sandwich_ok &= bounds.upper >= eig.eigenvalues().maxCoeff() - 1e-8;
    }

    bool chain_ok = true;
    for (int inst = 0; inst < 100; ++inst) {
        const int n = 3 + static_cast<int>(rng() % 10);
        const int m = 1 + static_cast<int>(rng() % 3);
        const auto x = SequenceSet::random(n, m, rng());
        std::vector<double> ws(n);
        for (double& v : ws) {
            v = nonneg(rng);
        }
        const WeightProfile w(ws);
        const auto table = corr::correlation_table_fft(x);
        const Eigen::MatrixXcd r_mat = oracle::dense_R_matrix(table, w);
        const Eigen::MatrixXcd b_mat = oracle::dense_B_matrix(w, n, m).cast<cplx>();
        const Eigen::VectorXcd xv = oracle::stacked_vector(x);
        const Eigen::MatrixXcd hm = r_mat - b_mat.cwiseProduct(xv * xv.adjoint());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(hm, Eigen::EigenvaluesOnly);
        const double bound = spectral::r_infinity_norm(table, w) -
                             spectral::lambda_b(spectral::lambda_w(w, n), m);
        chain_ok &= eig.eigenvalues().maxCoeff() <= bound + 1e-8;
    }

    bool lambda_a_ok = true;
    for (int inst = 0; inst < 100; ++inst) {
        const int n = 2 + static_cast<int>(rng() % 15);
        std::vector<double> a(2 * n);
        for (double& v : a) {
            v = nonneg(rng);
        }
        const auto h = oracle::dense_harmonic_matrix(n);
        Eigen::VectorXd av(2 * n);
        for (int p = 0; p < 2 * n; ++p) {
            av(p) = a[p];
        }
        const Eigen::MatrixXcd t = h.adjoint() * av.asDiagonal() * h;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(t, Eigen::EigenvaluesOnly);
        lambda_a_ok &= spectral::lambda_a(a, n) >= eig.eigenvalues().maxCoeff() - 1e-8;
    }

    bool quartic_ok = true;
    for (int inst = 0; inst < 100; ++inst) {
        const double t = nonneg(rng) + 1e-3;
        const double x0 = inst % 10 == 0 ? t : std::uniform_real_distribution<double>(0.0, t)(rng);
        const auto [a, b] = solver::quartic_majorizer_coeffs(x0, t);
        const double c = a * x0 * x0 - 3.0 * std::pow(x0, 4);
        for (int g = 0; g <= 1000; ++g) {
            const double xx = t * g / 1000.0;
            quartic_ok &= (a * xx * xx + b * xx + c) - std::pow(xx, 4) >= -1e-8;
        }
        quartic_ok &= std::abs(a * x0 * x0 + b * x0 + c - std::pow(x0, 4)) <= 1e-8;
    }

    bool ok = check(log, sandwich_ok, "eigenvalue sandwich (100 instances)");
    ok &= check(log, chain_ok, "curvature bound chain (100 instances)");
    ok &= check(log, lambda_a_ok, "lambda_a dominance (100 instances)");
    ok &= check(log, quartic_ok, "quartic majorizer grid dominance (100 instances)");
    return ok;
}

bool criterion8(std::ostream& log) {
    const int n = 32;
    const int m = 2;
    bool monotone_ok = true;
    bool accel_monotone_ok = true;
    bool ratio_ok = true;

    struct SolverCase {
        std::string name;
        std::function<std::pair<SequenceSet, SolverReport>(const SolverConfig&)> run;
    };
    std::vector<SolverCase> solvers = {
        {"css", [&](const SolverConfig& c) { return solver::design_css(n, m, c); }},
        {"corr", [&](const SolverConfig& c) { return solver::design_corr(n, m, c); }},
        {"wecorr",
         [&](const SolverConfig& c) {
             return solver::design_wecorr(n, m, WeightProfile::ones(n), c);
         }},
    };

    for (const auto& s : solvers) {
        long worst_ratio_num = 0;
        long worst_ratio_den = 1;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            SolverConfig plain;
            plain.seed = seed;
            plain.accel = false;
            plain.tol = 1e-6;
            plain.max_iter = 200000;
            const auto [xp, rp] = s.run(plain);
            double prev = rp.objective_trace.front().second;
            for (const auto& [it, f] : rp.objective_trace) {
                monotone_ok &= f <= prev + 1e-9 * std::max(1.0, std::abs(prev));
                prev = f;
            }

            SolverConfig fast = plain;
            fast.accel = true;
            const auto [xa, ra] = s.run(fast);
            prev = ra.objective_trace.front().second;
            for (const auto& [it, f] : ra.objective_trace) {
                accel_monotone_ok &= f <= prev + 1e-9 * std::max(1.0, std::abs(prev));
                prev = f;
            }
            ratio_ok &= ra.mm_map_evals <= 2 * rp.mm_map_evals;
            if (ra.mm_map_evals * worst_ratio_den > worst_ratio_num * rp.mm_map_evals) {
                worst_ratio_num = ra.mm_map_evals;
                worst_ratio_den = rp.mm_map_evals;
            }
        }
        log << "    " << s.name << ": worst accel/plain eval ratio = "
            << static_cast<double>(worst_ratio_num) / static_cast<double>(worst_ratio_den)
            << "\n";
    }

    bool ok = check(log, monotone_ok, "plain traces nonincreasing (3 solvers x 10 seeds)");
    ok &= check(log, accel_monotone_ok, "accelerated traces nonincreasing");
    ok &= check(log, ratio_ok, "accelerated runs within 2x plain mm-map evaluations");
    return ok;
}

bool criterion9(std::ostream& log) {
    std::mt19937_64 rng(777);
    bool ok = true;
    double worst_margin = 1e300;
    for (int inst = 0; inst < 1000; ++inst) {
        const int n = 2 + static_cast<int>(rng() % 63);
        const int m = 1 + static_cast<int>(rng() % 4);
        const auto x = SequenceSet::random(n, m, rng());
        const double bound = corr::psi_lower_bound(n, m);
        const double slack = 1e-6 * static_cast<double>(n) * n * m;
        const double psi = corr::psi(x);
        worst_margin = std::min(worst_margin, psi - bound);
        ok &= psi >= bound - slack;
    }
    log << "    worst psi - bound margin = " << worst_margin << "\n";
    return check(log, ok, "1000 random sets respect the lower bound");
}

}  // namespace

int main(int argc, char** argv) {
    g_work = fs::temp_directory_path() / "seqmm_acceptance";
    fs::create_directories(g_work);

    std::vector<Criterion> criteria = {
        {1, "corr n=256 m=2, 10 trials: min/avg psi near the bound", criterion1},
        {2, "corr n=256 m=4, 5 trials: min psi near the bound", criterion2},
        {3, "ZCZ reproduction (scaled): wecorr n=64 m=3 zcz 17:32", criterion3},
        {4, "CSS qualitative reproduction: n=128, m=3 vs m=1", criterion4},
        {5, "Exact CSS at golay size: n=2 m=2", criterion5},
        {6, "Oracle equivalence suite", criterion6},
        {7, "Bound suite", criterion7},
        {8, "Monotonicity suite", criterion8},
        {9, "Lower-bound respect", criterion9},
    };

    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        selected.push_back(std::atoi(argv[i]));
    }

    int failures = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
            continue;
        }
        std::ostringstream detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail << "    exception: " << e.what() << "\n";
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << "\n"
                  << detail.str();
        std::cout.flush();
        failures += ok ? 0 : 1;
    }
    if (failures == 0) {
        std::cout << "all criteria passed\n";
    } else {
        std::cout << failures << " criteria failed\n";
    }
    return failures;
}
