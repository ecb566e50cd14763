#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "pmelab/barenblatt.hpp"
#include "pmelab/measure.hpp"
#include "pmelab/rate_fit.hpp"
#include "pmelab/solver.hpp"
#include "pmelab/transforms.hpp"

using namespace pmelab;

TEST_CASE("cfl_dt: stated rule and degenerate cases") {
    Grid g(1, 0.0, 1.0, 100); // h = 0.01
    ScalarField f(g, FieldKind::density);
    for (std::size_t c = 0; c < f.size(); ++c) f[c] = 1.0;

    // 0.45 * h^2 / (2 d m max^(m-1)) with m=2, max=1.
    CHECK(cfl_dt(f, 2.0, nullptr) == doctest::Approx(1.125e-5).epsilon(1e-12));

    // Doubling the amplitude halves the diffusion-limited dt at m=2.
    ScalarField f2 = f;
    for (std::size_t c = 0; c < f2.size(); ++c) f2[c] = 2.0;
    CHECK(cfl_dt(f2, 2.0, nullptr) == doctest::Approx(0.5 * 1.125e-5).epsilon(1e-12));

    // Nothing to evolve: the full remaining time.
    ScalarField zero(g, FieldKind::density);
    CHECK(cfl_dt(zero, 2.0, nullptr, 0.45, 7.5) == 7.5);
}

TEST_CASE("step_density: zero stays zero; CFL violation rejected") {
    Grid g(1, -1.0, 1.0, 64);
    ScalarField zero(g, FieldKind::density);
    ScalarField out = step_density(zero, PotentialSpec::none(), 2.0, 1e-4);
    CHECK(out.max_abs() == 0.0);

    ScalarField f(g, FieldKind::density);
    for (std::size_t c = 0; c < f.size(); ++c) f[c] = 1.0;
    CHECK_THROWS_AS(step_density(f, PotentialSpec::none(), 2.0, 1.0), SolverAbort);
}

TEST_CASE("step_density: stationary profile moves at truncation level only") {
    Grid g(1, -2.0, 2.0, 512);
    const double cbar = 0.5;
    ScalarField rho = sample_field(g, FieldKind::density, 0.0, [&](const Pt& x) {
        const double v = cbar - 0.5 * x[0] * x[0];
        return v > 0.0 ? 0.5 * v : 0.0;
    });
    const double dt = cfl_dt(rho, 2.0, nullptr) * 0.5;
    ScalarField out = step_density(rho, PotentialSpec::quadratic(), 2.0, dt);
    double change = 0.0;
    for (std::size_t c = 0; c < out.size(); ++c)
        change = std::max(change, std::abs(out[c] - rho[c]));
    CHECK(change <= g.h()); // far below h in practice; one step is O(dt * h)
}

TEST_CASE("steady state: sup drift over unit time stays within 20 h") {
    Grid g(1, -2.0, 2.0, 256);
    ScalarField rho0 = sample_field(g, FieldKind::density, 0.0, [&](const Pt& x) {
        const double v = 0.5 - 0.5 * x[0] * x[0];
        return v > 0.0 ? 0.5 * v : 0.0;
    });
    SolverConfig cfg;
    cfg.m = 2.0;
    cfg.end_time = 1.0;
    Trajectory traj = solve(rho0, cfg, PotentialSpec::quadratic());
    double drift = 0.0;
    for (std::size_t c = 0; c < rho0.size(); ++c)
        drift = std::max(drift, std::abs(traj.back()[c] - rho0[c]));
    CHECK(drift <= 20.0 * g.h());
}

TEST_CASE("step_signed: pure source deposits the exact cell average") {
    Grid g(1, -4.0, 4.0, 128);
    ScalarField zero(g, FieldKind::signed_value);
    SourceTerm src;
    src.region = RegionBall{Pt(0.0), 2.0};
    src.strength = -0.3;
    const double dt = 1e-3;
    ScalarField out = step_signed(zero, 2.0, &src, dt);
    for (std::size_t c = 0; c < out.size(); ++c) {
        const double x = g.center(c)[0];
        if (std::abs(x) < 2.0 - g.h()) CHECK(out[c] == doctest::Approx(-0.3 * dt));
        if (std::abs(x) > 2.0 + g.h()) CHECK(out[c] == 0.0);
    }
    CHECK(mass(out) == doctest::Approx(-0.3 * dt * 4.0).epsilon(1e-12));

    // Without a source, zero stays zero.
    ScalarField still = step_signed(zero, 2.0, nullptr, dt);
    CHECK(still.max_abs() == 0.0);
}

TEST_CASE("signed solve: drainage identity is exact while the sink is interior") {
    for (int dim : {1, 2}) {
        Grid g(dim, -4.0, 4.0, dim == 1 ? 256 : 64);
        ScalarField w0 = sample_field(g, FieldKind::signed_value, 0.0, [&](const Pt& x) {
            return distance(x, Pt(), dim) <= 1.0 ? 0.3 : 0.0;
        });
        SourceTerm sink;
        sink.region = RegionBall{Pt(), 2.0};
        sink.strength = -0.01;
        SolverConfig cfg;
        cfg.m = 2.0;
        cfg.end_time = 0.1;
        Trajectory traj = solve(w0, cfg, std::nullopt, sink);
        const double vol = dim == 1 ? 4.0 : 4.0 * M_PI;
        const double expected = mass(traj.front()) - 0.01 * vol * 0.1;
        CHECK(mass(traj.back()) ==
              doctest::Approx(expected).epsilon(1e-12 * traj.stats().steps));
        // The signed form is the whole point: the sink drives w below zero
        // where the data vanished, and nothing clamps it.
        CHECK(traj.back().min_value() < 0.0);
        CHECK(traj.stats().clamped_mass_total == 0.0);
    }
}

TEST_CASE("solve: end_time 0 returns the initial snapshot only") {
    Grid g(1, -1.0, 1.0, 32);
    std::mt19937 rng(2);
    ScalarField f = test::random_bumps(g, rng, 2, false, FieldKind::density);
    SolverConfig cfg;
    cfg.m = 1.5;
    cfg.end_time = 0.0;
    Trajectory traj = solve(f, cfg);
    CHECK(traj.snapshots().size() == 1);
    CHECK(traj.back().time_stamp() == f.time_stamp());
}

TEST_CASE("solve: conservation and positivity on random data") {
    std::mt19937 rng(17);
    for (int dim : {1, 2}) {
        Grid g(dim, -2.0, 2.0, dim == 1 ? 128 : 32);
        ScalarField rho = test::random_bumps(g, rng, 4, false, FieldKind::density);
        SolverConfig cfg;
        cfg.m = 2.0;
        cfg.end_time = 0.02;
        cfg.support_guard = 0.0;
        Trajectory traj = solve(rho, cfg, PotentialSpec::quadratic());
        const double rel = std::abs(mass(traj.back()) - mass(traj.front())) /
                           std::max(mass(traj.front()), 1e-12);
        CHECK(rel <= 1e-10);
        CHECK(traj.stats().min_value >= -1e-15);
    }
}

TEST_CASE("solve: rejects unsupported field/term combinations") {
    Grid g(1, -1.0, 1.0, 32);
    ScalarField rho(g, FieldKind::density);
    ScalarField w(g, FieldKind::signed_value);
    SourceTerm src;
    src.region = RegionBall{Pt(), 0.5};
    src.strength = -0.1;
    SolverConfig cfg;
    cfg.m = 2.0;
    cfg.end_time = 0.01;
    CHECK_THROWS_AS(solve(rho, cfg, std::nullopt, src), ConfigError);
    CHECK_THROWS_AS(solve(w, cfg, PotentialSpec::quadratic(), std::nullopt), ConfigError);
    rho[0] = -0.5;
    CHECK_THROWS_AS(solve(rho, cfg), ConfigError);
}

TEST_CASE("solve: domain-too-small abort carries the failure time") {
    Grid g(1, -1.0, 1.0, 64);
    ScalarField rho = sample_field(g, FieldKind::density, 0.0, [&](const Pt& x) {
        const double v = 1.0 - x[0] * x[0] / 0.49;
        return v > 0.0 ? v : 0.0;
    });
    SolverConfig cfg;
    cfg.m = 1.5; // fast spreading
    cfg.end_time = 10.0;
    cfg.support_guard = 0.3;
    CHECK_THROWS_AS(solve(rho, cfg), DomainTooSmall);
}

TEST_CASE("comparison principle holds cellwise on random ordered pairs") {
    std::mt19937 rng(23);
    Grid g(1, -2.0, 2.0, 96);
    SolverConfig cfg;
    cfg.m = 1.7;
    cfg.end_time = 0.02;
    cfg.support_guard = 0.0;
    SourceTerm sink;
    sink.region = RegionBall{Pt(0.2), 1.0};
    sink.strength = -0.05;

    double worst = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
        // density with drift
        ScalarField lo = test::random_bumps(g, rng, 3, false, FieldKind::density);
        ScalarField hi = lo;
        ScalarField extra = test::random_bumps(g, rng, 2, false, FieldKind::density);
        for (std::size_t c = 0; c < hi.size(); ++c) hi[c] += 0.4 * extra[c];
        worst = std::min(worst,
                         solve_pair(lo, hi, cfg, PotentialSpec::quadratic()).min_gap);
        // signed with a sink, both signs
        ScalarField slo = test::random_bumps(g, rng, 3, true, FieldKind::signed_value);
        ScalarField shi = slo;
        ScalarField sex = test::random_bumps(g, rng, 2, false, FieldKind::signed_value);
        for (std::size_t c = 0; c < shi.size(); ++c) shi[c] += 0.4 * sex[c];
        worst = std::min(worst, solve_pair(slo, shi, cfg, std::nullopt, sink, sink).min_gap);
    }
    CHECK(worst >= -1e-12);
}

TEST_CASE("sink-free run dominates the sink run (supersolution)") {
    std::mt19937 rng(29);
    Grid g(1, -2.0, 2.0, 96);
    SolverConfig cfg;
    cfg.m = 1.6;
    cfg.end_time = 0.05;
    cfg.support_guard = 0.0;
    SourceTerm sink;
    sink.region = RegionBall{Pt(), 1.5};
    sink.strength = -0.02;
    ScalarField w0 = test::random_bumps(g, rng, 3, false, FieldKind::signed_value);
    PairRun pr = solve_pair(w0, w0, cfg, std::nullopt, sink, std::nullopt);
    CHECK(pr.min_gap >= -1e-12);
}

TEST_CASE("Barenblatt accuracy: L1 error refines at order >= 0.8") {
    const double m = 2.0;
    BarenblattParams bp;
    bp.lambda = lambda_exponent(m, 1);
    bp.C = 1.0;
    const double t_end = 0.5;
    std::vector<double> errs, hs;
    for (int cells : {128, 256, 512}) {
        Grid g(1, -4.0, 4.0, cells);
        ScalarField rho0 = barenblatt_density_field(bp, m, g, 0.0);
        SolverConfig cfg;
        cfg.m = m;
        cfg.end_time = t_end;
        Trajectory traj = solve(rho0, cfg);
        ScalarField exact = barenblatt_density_field(bp, m, g, t_end);
        errs.push_back(test::l1_between(traj.back(), exact));
        hs.push_back(g.h());
    }
    std::vector<double> lh, le;
    for (std::size_t i = 0; i < errs.size(); ++i) {
        lh.push_back(std::log(hs[i]));
        le.push_back(std::log(errs[i]));
    }
    CHECK(least_squares_line(lh, le).slope >= 0.8);
}

TEST_CASE("2D: stationary profile and self-similar refinement") {
    // Stationary profile under the quadratic potential, m = 2, d = 2.
    {
        Grid g(2, -2.0, 2.0, 96);
        ScalarField rho0 = sample_field(g, FieldKind::density, 0.0, [&](const Pt& x) {
            const double v = 0.35 - 0.5 * (x[0] * x[0] + x[1] * x[1]);
            return v > 0.0 ? 0.5 * v : 0.0;
        });
        SolverConfig cfg;
        cfg.m = 2.0;
        cfg.end_time = 1.0;
        Trajectory traj = solve(rho0, cfg, PotentialSpec::quadratic());
        double drift = 0.0;
        for (std::size_t c = 0; c < rho0.size(); ++c)
            drift = std::max(drift, std::abs(traj.back()[c] - rho0[c]));
        CHECK(drift <= 20.0 * g.h());
    }
    // Drift-free self-similar run: error halves (at least by 1.5x) with h.
    {
        const double m = 2.0;
        BarenblattParams bp;
        bp.lambda = lambda_exponent(m, 2);
        bp.C = 0.5;
        std::vector<double> errs;
        for (int cells : {48, 96}) {
            Grid g(2, -4.0, 4.0, cells);
            ScalarField rho0 = barenblatt_density_field(bp, m, g, 0.0);
            SolverConfig cfg;
            cfg.m = m;
            cfg.end_time = 0.25;
            Trajectory traj = solve(rho0, cfg);
            errs.push_back(
                test::l1_between(traj.back(), barenblatt_density_field(bp, m, g, 0.25)));
        }
        CHECK(errs[0] / errs[1] >= 1.5);
    }
}

TEST_CASE("2D: ordered pairs stay ordered (drift and sink forms)") {
    std::mt19937 rng(37);
    Grid g(2, -2.0, 2.0, 32);
    SolverConfig cfg;
    cfg.m = 1.8;
    cfg.end_time = 0.02;
    cfg.support_guard = 0.0;
    SourceTerm sink;
    sink.region = RegionBall{Pt(0.2, -0.1), 1.0};
    sink.strength = -0.05;
    double worst = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
        ScalarField lo = test::random_bumps(g, rng, 3, false, FieldKind::density);
        ScalarField hi = lo;
        ScalarField extra = test::random_bumps(g, rng, 2, false, FieldKind::density);
        for (std::size_t c = 0; c < hi.size(); ++c) hi[c] += 0.4 * extra[c];
        worst = std::min(worst, solve_pair(lo, hi, cfg, PotentialSpec::quadratic()).min_gap);

        ScalarField slo = test::random_bumps(g, rng, 3, true, FieldKind::signed_value);
        ScalarField shi = slo;
        ScalarField sex = test::random_bumps(g, rng, 2, false, FieldKind::signed_value);
        for (std::size_t c = 0; c < shi.size(); ++c) shi[c] += 0.4 * sex[c];
        worst = std::min(worst, solve_pair(slo, shi, cfg, std::nullopt, sink, sink).min_gap);
    }
    CHECK(worst >= -1e-12);
}
