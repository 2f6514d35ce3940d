#include <doctest.h>

#include <cmath>
#include <random>

#include "seqmm/accel.hpp"
#include "seqmm/corr.hpp"
#include "seqmm/kernels.hpp"
#include "seqmm/solver_corr.hpp"
#include "seqmm/solver_css.hpp"
#include "test_util.hpp"

using namespace seqmm;

namespace {

std::vector<cplx> to_vector(std::span<const cplx> v) { return {v.begin(), v.end()}; }

// Wraps the MM-Corr step as a map over stacked unimodular vectors.
accel::MmMap corr_map(int n, int m) {
    return [n, m](std::span<const cplx> v) {
        const SequenceSet x(n, m, to_vector(v));
        const auto next = solver::corr_iterate(solver::corr_make_state(x));
        return to_vector(next.x.stacked());
    };
}

accel::Objective corr_objective(int n, int m) {
    return [n, m](std::span<const cplx> v) {
        return corr::psi(SequenceSet(n, m, to_vector(v)));
    };
}

}  // namespace

TEST_CASE("identity map is a fixed point of the accelerator") {
    std::mt19937_64 rng(3);
    const auto x = SequenceSet::random(8, 2, 4);
    const auto xv = to_vector(x.stacked());
    accel::MmMap identity = [](std::span<const cplx> v) { return to_vector(v); };
    accel::Objective constant = [](std::span<const cplx>) { return 1.0; };
    const auto res = accel::accel_step(xv, identity, constant);
    REQUIRE(res.x.size() == xv.size());
    for (std::size_t i = 0; i < xv.size(); ++i) {
        CHECK(res.x[i] == xv[i]);
    }
}

TEST_CASE("accelerated steps stay feasible and monotone") {
    const int n = 32;
    const int m = 2;
    auto map = corr_map(n, m);
    auto obj = corr_objective(n, m);
    auto xv = to_vector(SequenceSet::random(n, m, 9).stacked());
    double prev = obj(xv);
    for (int it = 0; it < 15; ++it) {
        const auto res = accel::accel_step(xv, map, obj);
        CHECK(res.objective <= prev + 1e-9 * std::max(1.0, prev));
        for (const auto& v : res.x) {
            CHECK(std::abs(std::abs(v) - 1.0) < 1e-12);
        }
        prev = res.objective;
        xv = res.x;
    }
}

TEST_CASE("css acceleration keeps the trace nonincreasing") {
    SolverConfig config;
    config.seed = 5;
    config.accel = true;
    config.max_iter = 200;
    config.tol = 1e-12;
    auto [x, report] = solver::design_css(32, 2, config);
    double prev = report.objective_trace.front().second;
    for (const auto& [it, f] : report.objective_trace) {
        CHECK(f <= prev + 1e-9 * std::max(1.0, prev));
        prev = f;
    }
}

TEST_CASE("acceleration reaches tolerance with fewer map evaluations") {
    SolverConfig plain;
    plain.seed = 12;
    plain.accel = false;
    plain.tol = 1e-8;
    SolverConfig fast = plain;
    fast.accel = true;

    auto [xp, rp] = solver::design_corr(64, 2, plain);
    auto [xa, ra] = solver::design_corr(64, 2, fast);
    CHECK(ra.mm_map_evals < rp.mm_map_evals);
    // both end near each other's objective scale
    CHECK(ra.final_objective <= rp.final_objective * 1.05);
}

TEST_CASE("zero backtrack budget degrades to two plain steps") {
    const int n = 8;
    const int m = 2;
    auto map = corr_map(n, m);
    auto obj = corr_objective(n, m);
    const auto xv = to_vector(SequenceSet::random(n, m, 21).stacked());

    accel::AccelConfig cfg;
    cfg.max_backtracks = 0;
    const auto res = accel::accel_step(xv, map, obj, cfg);

    const auto two_steps = map(map(xv));
    REQUIRE(res.x.size() == two_steps.size());
    for (std::size_t i = 0; i < two_steps.size(); ++i) {
        CHECK(std::abs(res.x[i] - two_steps[i]) < 1e-14);
    }
    CHECK(res.mm_evals == 2);
}

TEST_CASE("vanishing extrapolation direction returns the two-step point") {
    // At a fixed point r = v = 0, so the step exits after the two plain
    // applications.
    std::mt19937_64 rng(31);
    const auto x0 = test::random_complex(6, rng);
    std::vector<cplx> x0u(6);
    kernels::phase_project(x0.data(), x0u.data(), 6);
    accel::MmMap identity = [](std::span<const cplx> v) {
        return std::vector<cplx>(v.begin(), v.end());
    };
    accel::Objective obj = [](std::span<const cplx>) { return 2.0; };
    const auto res = accel::accel_step(x0u, identity, obj);
    for (std::size_t i = 0; i < x0u.size(); ++i) {
        CHECK(res.x[i] == x0u[i]);
    }
    CHECK(res.mm_evals == 2);
}

TEST_CASE("constant map converges in one safeguarded step") {
    // r = c - x and v = -r, so extrapolation with alpha = -1 reproduces the
    // two-step point and is accepted after one extra evaluation.
    const std::vector<cplx> c(6, cplx{1, 0});
    accel::MmMap constant_map = [&](std::span<const cplx>) { return c; };
    accel::Objective obj = [](std::span<const cplx>) { return 2.0; };
    std::mt19937_64 rng(33);
    const auto x0 = test::random_complex(6, rng);
    std::vector<cplx> x0u(6);
    kernels::phase_project(x0.data(), x0u.data(), 6);
    const auto res = accel::accel_step(x0u, constant_map, obj);
    for (const auto& v : res.x) {
        CHECK(v == cplx{1, 0});
    }
    CHECK(res.mm_evals == 3);
}
