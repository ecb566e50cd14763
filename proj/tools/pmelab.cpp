// Command-line front end: scenario configs in, reports/plots/manifests out.
// Exit codes: 0 all checks pass, 1 any check failed (or hypothesis not met),
// 2 config or usage error, 3 runtime abort.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <iostream>
#include <random>

#include "CLI11.hpp"

#include "pmelab/barenblatt.hpp"
#include "pmelab/config_file.hpp"
#include "pmelab/experiments.hpp"
#include "pmelab/field_io.hpp"
#include "pmelab/manifest.hpp"
#include "pmelab/measure.hpp"
#include "pmelab/rate_fit.hpp"
#include "pmelab/report_io.hpp"
#include "pmelab/svg_plot.hpp"
#include "pmelab/transforms.hpp"

namespace fs = std::filesystem;
using namespace pmelab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitAbort = 3;

class StageClock {
public:
    explicit StageClock(RunManifest& m) : manifest_(m) { last_ = clock_t::now(); }
    void lap(const std::string& stage) {
        const auto now = clock_t::now();
        const double sec = std::chrono::duration<double>(now - last_).count();
        manifest_.wall_clock_s.emplace_back(stage, sec);
        last_ = now;
    }

private:
    using clock_t = std::chrono::steady_clock;
    RunManifest& manifest_;
    clock_t::time_point last_;
};

std::string default_out_root() {
    if (const char* env = std::getenv("PMELAB_OUT")) return env;
    return "pmelab_out";
}

fs::path prepare_out_dir(const std::string& out, const std::string& sub) {
    fs::path dir = out.empty() ? fs::path(default_out_root()) / sub : fs::path(out);
    fs::create_directories(dir);
    return dir;
}

int outcome_exit(Outcome o) { return o == Outcome::PASS ? kExitPass : kExitFail; }

void print_checks(const std::vector<Check>& checks) {
    for (const auto& c : checks) {
        std::printf("  [%s] %s (measured %.6g, threshold %.6g)%s%s\n",
                    c.pass ? "PASS" : "FAIL", c.name.c_str(), c.measured, c.threshold,
                    c.note.empty() ? "" : " - ", c.note.c_str());
    }
}

void write_snapshots(const Trajectory& traj, const fs::path& dir, RunManifest& manifest) {
    int i = 0;
    for (const auto& snap : traj.snapshots()) {
        char name[32];
        std::snprintf(name, sizeof(name), "snap_%03d.csv", i++);
        const fs::path p = dir / name;
        write_field_csv(p.string(), snap);
        manifest.artifacts.emplace_back("snapshot", p.string());
    }
}

// ---------------------------------------------------------------------------

int cmd_solve(const std::string& config_path, const std::string& out) {
    ScenarioConfig cfg = load_config(config_path);
    const fs::path dir = prepare_out_dir(out, "solve");
    RunManifest manifest;
    manifest.subcommand = "solve";
    manifest.seed = cfg.seed;
    manifest.config_text = serialize_config(cfg);
    StageClock clock(manifest);

    ScalarField rho0 = make_initial_data(cfg);
    SolverConfig scfg = cfg.solver;
    scfg.m = cfg.m;
    if (scfg.end_time <= 0.0) scfg.end_time = 0.5;
    Trajectory traj = solve(rho0, scfg, cfg.potential, std::nullopt);
    clock.lap("solve");

    if (cfg.output.write_fields) write_snapshots(traj, dir, manifest);
    write_text_file((dir / "run.json").string(), trajectory_json(traj));
    manifest.artifacts.emplace_back("run", (dir / "run.json").string());
    clock.lap("write");

    Outcome outcome = Outcome::PASS;
    if (cfg.output.mass_check != "off") {
        const double m0 = mass(traj.front());
        const double m1 = mass(traj.back());
        const double rel = std::abs(m1 - m0) / std::max(std::abs(m0), 1e-12);
        const bool ok = rel <= 1e-8;
        outcome = ok ? Outcome::PASS : Outcome::FAIL;
        std::printf("  [%s] mass conserved to 1e-8 relative (drift %.3g)\n",
                    ok ? "PASS" : "FAIL", rel);
        manifest.outcomes.emplace_back("mass_conservation", to_string(outcome));
    }
    manifest.write((dir / "manifest.json").string());
    std::printf("solve: %s (%ld steps) -> %s\n", to_string(outcome).c_str(),
                traj.stats().steps, dir.string().c_str());
    return outcome_exit(outcome);
}

int cmd_lemma34(const std::string& config_path, const std::string& out) {
    ScenarioConfig cfg = load_config(config_path);
    const fs::path dir = prepare_out_dir(out, "lemma34");
    RunManifest manifest;
    manifest.subcommand = "lemma34";
    manifest.seed = cfg.seed;
    manifest.config_text = serialize_config(cfg);
    StageClock clock(manifest);

    Lemma34Report rep = run_lemma34(cfg);
    clock.lap("run");
    write_text_file((dir / "lemma34.json").string(), to_json(rep));
    manifest.artifacts.emplace_back("report", (dir / "lemma34.json").string());
    manifest.outcomes.emplace_back("lemma34", to_string(rep.outcome));
    manifest.write((dir / "manifest.json").string());
    print_checks(rep.checks);
    std::printf("lemma34: %s -> %s\n", to_string(rep.outcome).c_str(), dir.string().c_str());
    return outcome_exit(rep.outcome);
}

int cmd_eq2(const std::string& config_path, const std::string& out) {
    ScenarioConfig cfg = load_config(config_path);
    const fs::path dir = prepare_out_dir(out, "eq2");
    RunManifest manifest;
    manifest.subcommand = "eq2";
    manifest.seed = cfg.seed;
    manifest.config_text = serialize_config(cfg);
    StageClock clock(manifest);

    Eq2Report rep = run_eq2_diagnostics(cfg);
    clock.lap("run");
    write_text_file((dir / "eq2.json").string(), to_json(rep));
    manifest.artifacts.emplace_back("report", (dir / "eq2.json").string());
    manifest.outcomes.emplace_back("eq2", to_string(rep.outcome));
    manifest.write((dir / "manifest.json").string());
    print_checks(rep.checks);
    std::printf("eq2: %s -> %s\n", to_string(rep.outcome).c_str(), dir.string().c_str());
    return outcome_exit(rep.outcome);
}

int cmd_lemma35(const std::string& config_path, const std::string& out,
                const std::vector<double>& scan) {
    ScenarioConfig cfg = load_config(config_path);
    const fs::path dir = prepare_out_dir(out, "lemma35");
    RunManifest manifest;
    manifest.subcommand = "lemma35";
    manifest.seed = cfg.seed;
    manifest.config_text = serialize_config(cfg);
    StageClock clock(manifest);

    Outcome outcome;
    if (scan.empty()) {
        Lemma35Report rep = run_lemma35(cfg);
        clock.lap("run");
        write_text_file((dir / "lemma35.json").string(), to_json(rep));
        manifest.artifacts.emplace_back("report", (dir / "lemma35.json").string());
        print_checks(rep.checks);
        outcome = rep.outcome;
    } else {
        Lemma35Scan rep = run_lemma35_scan(cfg, scan);
        clock.lap("run");
        write_text_file((dir / "lemma35_scan.json").string(), to_json(rep));
        manifest.artifacts.emplace_back("report", (dir / "lemma35_scan.json").string());
        print_checks(rep.checks);
        outcome = rep.outcome;
    }
    manifest.outcomes.emplace_back("lemma35", to_string(outcome));
    manifest.write((dir / "manifest.json").string());
    std::printf("lemma35: %s -> %s\n", to_string(outcome).c_str(), dir.string().c_str());
    return outcome_exit(outcome);
}

int cmd_converge(const std::string& config_path, const std::string& out) {
    ScenarioConfig cfg = load_config(config_path);
    const fs::path dir = prepare_out_dir(out, "converge");
    RunManifest manifest;
    manifest.subcommand = "converge";
    manifest.seed = cfg.seed;
    manifest.config_text = serialize_config(cfg);
    StageClock clock(manifest);

    ConvergenceReport rep = run_convergence(cfg);
    clock.lap("run");
    write_text_file((dir / "rates.json").string(), to_json(rep));
    write_text_file((dir / "distances.csv").string(), rate_series_csv(rep.rates));
    manifest.artifacts.emplace_back("report", (dir / "rates.json").string());
    manifest.artifacts.emplace_back("series", (dir / "distances.csv").string());
    if (cfg.output.write_svg) {
        std::vector<SvgSeries> series{{"d_pos", rep.rates.times, rep.rates.d_pos},
                                      {"d_gamma", rep.rates.times, rep.rates.d_gamma}};
        write_text_file((dir / "rates.svg").string(),
                        log_linear_svg("free-boundary distance decay", series,
                                       rep.rates.resolution_floor));
        manifest.artifacts.emplace_back("plot", (dir / "rates.svg").string());
    }
    clock.lap("write");
    manifest.outcomes.emplace_back("converge", to_string(rep.outcome));
    manifest.write((dir / "manifest.json").string());
    print_checks(rep.checks);
    std::printf("converge: %s -> %s\n", to_string(rep.outcome).c_str(), dir.string().c_str());
    return outcome_exit(rep.outcome);
}

struct BarrierCheckArgs {
    double m = 1.5;
    int dim = 1;
    double a = 0.1;
    int refine = 3;
    double lambda = -1.0; // < 0: derived from (m, dim)
    double c1 = -1.0;     // < 0: quadratic-potential bound over the unit ball
    int base_cells = 128;
    std::string out;
};

int cmd_barrier_check(const BarrierCheckArgs& args) {
    const fs::path dir = prepare_out_dir(args.out, "barrier_check");
    RunManifest manifest;
    manifest.subcommand = "barrier-check";
    manifest.config_text = "";
    StageClock clock(manifest);

    const double lam_exact = lambda_exponent(args.m, args.dim);
    const double lam = args.lambda > 0.0 ? args.lambda : lam_exact;
    const double C1 =
        args.c1 >= 0.0
            ? args.c1
            : PotentialSpec::quadratic().c2_norm_bound(RegionBall{Pt(), 1.0}, args.dim);

    BarenblattParams exact;
    exact.C = std::pow(args.a, 0.5 * lam_exact);
    exact.lambda = lam_exact;

    BarrierParams barrier;
    barrier.base = exact;
    barrier.base.lambda = lam;
    barrier.base.C = std::pow(args.a, 0.5 * lam);
    barrier.C1 = C1;
    barrier.a = args.a;

    // Sample times inside the barrier's lifetime, capped at 1/a.
    const double t_cap = 1.0 / args.a;
    const double death = barrier_death_time(barrier, t_cap);
    const double t_hi = std::min(t_cap, std::isfinite(death) ? 0.9 * death : t_cap);
    std::vector<double> times;
    for (int i = 0; i <= 6; ++i) times.push_back(t_hi * i / 6.0);

    const double span = 2.0 * barenblatt_support_radius(barrier.base, t_hi) + 2.0;
    std::vector<double> hs, exact_res, barrier_res;
    std::vector<int> level_cells;
    double delta = 0.0;
    for (int lvl = 0; lvl < args.refine; ++lvl) {
        const int cells = args.base_cells << lvl;
        const Grid grid(args.dim, -0.5 * span, 0.5 * span, cells);
        const double h = grid.h();
        const double fd_dt = 0.25 * h;
        if (lvl == 0)
            delta = std::max(1e-3 * barrier.base.C,
                             3.0 * h * std::sqrt(2.0 * barrier.base.C * lam));
        auto rep_exact = residual_pressure_operator(barenblatt_fn(exact, args.dim), args.m,
                                                    0.0, args.a, grid, times, delta, fd_dt);
        auto rep_barrier = residual_pressure_operator(barrier_fn(barrier, args.dim), args.m,
                                                      C1, args.a, grid, times, delta, fd_dt);
        hs.push_back(h);
        level_cells.push_back(cells);
        exact_res.push_back(rep_exact.max_abs_residual);
        barrier_res.push_back(rep_barrier.max_residual);
    }
    clock.lap("sweep");

    // Self-calibrating tolerance from the exact-solution case.
    double A = 0.0;
    for (std::size_t i = 0; i < hs.size(); ++i)
        A = std::max(A, exact_res[i] / (hs[i] + 0.25 * hs[i]));
    A *= 3.0;

    std::string table = "cells,h,fd_dt,exact_max_abs,barrier_max,tol\n";
    for (std::size_t i = 0; i < hs.size(); ++i) {
        char row[200];
        std::snprintf(row, sizeof(row), "%d,%.6g,%.6g,%.6g,%.6g,%.6g\n", level_cells[i],
                      hs[i], 0.25 * hs[i], exact_res[i], barrier_res[i],
                      A * (hs[i] + 0.25 * hs[i]));
        table += row;
    }

    std::vector<Check> checks;
    bool tol_ok = true;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        const double tol = A * (hs[i] + 0.25 * hs[i]);
        if (barrier_res[i] > tol) tol_ok = false;
    }
    double order = 0.0;
    {
        std::vector<double> lh, lr;
        for (std::size_t i = 0; i < hs.size(); ++i) {
            if (exact_res[i] <= 0.0) continue;
            lh.push_back(std::log(hs[i]));
            lr.push_back(std::log(exact_res[i]));
        }
        if (lh.size() >= 2) order = least_squares_line(lh, lr).slope;
    }
    auto grad = gradient_bound_check(barrier.base, args.a, t_cap,
                                     Grid(args.dim, -0.5 * span, 0.5 * span, args.base_cells));

    Check c1c;
    c1c.name = "barrier residual below calibrated tol(h,dt) on the delta-interior";
    c1c.pass = tol_ok;
    c1c.measured = barrier_res.back();
    c1c.threshold = A * (hs.back() + 0.25 * hs.back());
    checks.push_back(c1c);
    Check c2c;
    c2c.name = "exact-solution residual refinement order >= 0.8";
    c2c.pass = order >= 0.8;
    c2c.measured = order;
    c2c.threshold = 0.8;
    checks.push_back(c2c);
    Check c3c;
    c3c.name = "envelope bound on a*U and |DU| up to t = 1/a";
    c3c.pass = grad.pass;
    c3c.measured = std::max(grad.max_aU_minus_c, grad.max_DU_minus_c);
    c3c.threshold = grad.slack;
    checks.push_back(c3c);

    const Outcome outcome = aggregate_outcome(checks, true);
    write_text_file((dir / "refinement.csv").string(), table);
    write_text_file((dir / "gradient_bound.json").string(), to_json(grad));
    manifest.artifacts.emplace_back("table", (dir / "refinement.csv").string());
    manifest.artifacts.emplace_back("report", (dir / "gradient_bound.json").string());
    manifest.outcomes.emplace_back("barrier_check", to_string(outcome));
    manifest.write((dir / "manifest.json").string());
    print_checks(checks);
    std::printf("barrier-check: %s -> %s\n", to_string(outcome).c_str(), dir.string().c_str());
    return outcome_exit(outcome);
}

// ---------------------------------------------------------------------------
// suite: the fast invariant battery, scenarios in parallel up to --jobs.
// ---------------------------------------------------------------------------

Outcome suite_comparison(const ScenarioConfig& base, std::string& note) {
    std::mt19937 rng(base.seed);
    std::uniform_real_distribution<double> amp(0.1, 0.6), width(0.3, 0.9), pos(-0.8, 0.8);
    const Grid grid(1, -2.0, 2.0, 96);
    SolverConfig scfg;
    scfg.m = base.m;
    scfg.end_time = 0.01;
    scfg.support_guard = 0.0;

    double worst = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
        auto bump = [&](FieldKind kind, bool allow_negative) {
            ScalarField f(grid, kind, 0.0);
            for (int b = 0; b < 3; ++b) {
                const double A = amp(rng) * (allow_negative && b % 2 ? -1.0 : 1.0);
                const double w = width(rng), c = pos(rng);
                for (std::size_t cc = 0; cc < f.size(); ++cc) {
                    const double r = grid.center(cc)[0] - c;
                    const double v = 1.0 - r * r / (w * w);
                    if (v > 0.0) f[cc] += A * v;
                }
            }
            if (!allow_negative)
                for (std::size_t cc = 0; cc < f.size(); ++cc) f[cc] = std::max(f[cc], 0.0);
            return f;
        };
        // density pair with drift
        {
            ScalarField lo = bump(FieldKind::density, false);
            ScalarField hi = lo;
            ScalarField extra = bump(FieldKind::density, false);
            for (std::size_t cc = 0; cc < hi.size(); ++cc) hi[cc] += 0.3 * extra[cc];
            auto pr = solve_pair(lo, hi, scfg, PotentialSpec::quadratic());
            worst = std::min(worst, pr.min_gap);
        }
        // signed pair with a sink
        {
            ScalarField lo = bump(FieldKind::signed_value, true);
            ScalarField hi = lo;
            ScalarField extra = bump(FieldKind::signed_value, false);
            for (std::size_t cc = 0; cc < hi.size(); ++cc) hi[cc] += 0.3 * extra[cc];
            SourceTerm sink;
            sink.region = RegionBall{Pt(), 1.0};
            sink.strength = -0.01;
            auto pr = solve_pair(lo, hi, scfg, std::nullopt, sink, sink);
            worst = std::min(worst, pr.min_gap);
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "worst cellwise gap %.3g", worst);
    note = buf;
    return worst >= -1e-12 ? Outcome::PASS : Outcome::FAIL;
}

Outcome suite_conservation(const ScenarioConfig& base, std::string& note) {
    std::mt19937 rng(base.seed + 1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const Grid grid(1, -2.0, 2.0, 128);
    ScalarField rho(grid, FieldKind::density, 0.0);
    for (std::size_t c = 0; c < rho.size(); ++c) rho[c] = u(rng);
    SolverConfig scfg;
    scfg.m = base.m;
    scfg.end_time = 0.01;
    scfg.support_guard = 0.0;
    Trajectory traj = solve(rho, scfg);
    const double rel =
        std::abs(mass(traj.back()) - mass(traj.front())) / std::max(mass(traj.front()), 1e-12);
    char buf[96];
    std::snprintf(buf, sizeof(buf), "relative mass drift %.3g", rel);
    note = buf;
    return rel <= 1e-10 ? Outcome::PASS : Outcome::FAIL;
}

Outcome suite_transforms(const ScenarioConfig& base, std::string& note) {
    std::mt19937 rng(base.seed + 2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const Grid grid(1, -2.0, 2.0, 64);
    ScalarField rho(grid, FieldKind::density, 0.0);
    for (std::size_t c = 0; c < rho.size(); ++c) rho[c] = u(rng);
    double worst = 0.0;
    for (double m : {1.5, 2.0, 3.0}) {
        ScalarField back = density_of_pressure(pressure_of_density(rho, m), m);
        for (std::size_t c = 0; c < rho.size(); ++c)
            worst = std::max(worst, std::abs(back[c] - rho[c]));
    }
    const bool ids = mtilde(2.0, 0.0) == 2.0 && lemma35_exponent(2.0, 1) == 0.5 &&
                     lemma35_exponent(2.0, 3) == 0.25;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "round-trip error %.3g", worst);
    note = buf;
    return (worst <= 1e-12 && ids) ? Outcome::PASS : Outcome::FAIL;
}

int cmd_suite(const std::string& config_path, const std::string& out, int jobs) {
    ScenarioConfig base;
    if (!config_path.empty()) base = load_config(config_path);
    base.grid.cells = std::min(base.grid.cells, 512);
    const fs::path dir = prepare_out_dir(out, "suite");
    RunManifest manifest;
    manifest.subcommand = "suite";
    manifest.seed = base.seed;
    manifest.config_text = serialize_config(base);
    StageClock clock(manifest);

    struct Task {
        std::string name;
        std::function<std::pair<Outcome, std::string>()> run;
    };
    std::vector<Task> tasks;
    tasks.push_back({"lemma34", [base, dir]() {
                         ScenarioConfig cfg = base;
                         Lemma34Report r = run_lemma34(cfg);
                         write_text_file((dir / "lemma34.json").string(), to_json(r));
                         return std::make_pair(r.outcome, std::string());
                     }});
    tasks.push_back({"eq2", [base, dir]() {
                         ScenarioConfig cfg = base;
                         cfg.C2 = 1e-2 / cfg.a;
                         // The sink ball has radius 2; give it room.
                         cfg.grid.lower = -4.0;
                         cfg.grid.upper = 4.0;
                         Eq2Report r = run_eq2_diagnostics(cfg);
                         write_text_file((dir / "eq2.json").string(), to_json(r));
                         return std::make_pair(r.outcome, std::string());
                     }});
    tasks.push_back({"comparison", [base]() {
                         std::string note;
                         Outcome o = suite_comparison(base, note);
                         return std::make_pair(o, note);
                     }});
    tasks.push_back({"conservation", [base]() {
                         std::string note;
                         Outcome o = suite_conservation(base, note);
                         return std::make_pair(o, note);
                     }});
    tasks.push_back({"transforms", [base]() {
                         std::string note;
                         Outcome o = suite_transforms(base, note);
                         return std::make_pair(o, note);
                     }});
    tasks.push_back({"barrier", [base]() {
                         // Closed-form profiles only; quick residual screen.
                         const double m = std::min(base.m, 1.9), a = 0.1;
                         const double lam = lambda_exponent(m, 1);
                         BarenblattParams exact;
                         exact.lambda = lam;
                         exact.C = std::pow(a, 0.5 * lam);
                         BarrierParams barrier;
                         barrier.base = exact;
                         barrier.C1 = 2.5;
                         barrier.a = a;
                         Grid g(1, -4.0, 4.0, 256);
                         const double delta =
                             std::max(1e-3 * exact.C,
                                      3.0 * g.h() * std::sqrt(2.0 * exact.C * lam));
                         const std::vector<double> times{0.0, 0.5, 1.0};
                         auto rep = residual_pressure_operator(barrier_fn(barrier, 1), m,
                                                               barrier.C1, a, g, times,
                                                               delta, 0.25 * g.h());
                         char buf[96];
                         std::snprintf(buf, sizeof(buf), "max residual %.3g",
                                       rep.max_residual);
                         return std::make_pair(
                             rep.max_residual <= 1e-6 ? Outcome::PASS : Outcome::FAIL,
                             std::string(buf));
                     }});

    jobs = std::max(1, jobs);
    std::vector<std::pair<Outcome, std::string>> results(tasks.size());
    std::size_t next = 0;
    while (next < tasks.size()) {
        const std::size_t batch = std::min<std::size_t>(jobs, tasks.size() - next);
        std::vector<std::future<std::pair<Outcome, std::string>>> futs;
        for (std::size_t i = 0; i < batch; ++i)
            futs.push_back(std::async(std::launch::async, tasks[next + i].run));
        for (std::size_t i = 0; i < batch; ++i) {
            try {
                results[next + i] = futs[i].get();
            } catch (const std::exception& e) {
                results[next + i] = {Outcome::ERROR, e.what()};
            }
        }
        next += batch;
    }
    clock.lap("run");

    bool all_pass = true;
    std::string summary = "{\n";
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const auto& [o, note] = results[i];
        if (o != Outcome::PASS) all_pass = false;
        std::printf("  [%s] %s%s%s\n", to_string(o).c_str(), tasks[i].name.c_str(),
                    note.empty() ? "" : " - ", note.c_str());
        manifest.outcomes.emplace_back(tasks[i].name, to_string(o));
        summary += "  \"" + tasks[i].name + "\": \"" + to_string(o) + "\"";
        summary += (i + 1 < tasks.size()) ? ",\n" : "\n";
    }
    summary += "}\n";
    write_text_file((dir / "summary.json").string(), summary);
    manifest.artifacts.emplace_back("summary", (dir / "summary.json").string());
    manifest.write((dir / "manifest.json").string());
    std::printf("suite: %s -> %s\n", all_pass ? "PASS" : "FAIL", dir.string().c_str());
    for (const auto& [o, note] : results)
        if (o == Outcome::ERROR) return kExitAbort;
    return all_pass ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pmelab: a desk-scale laboratory for degenerate diffusion with drift"};
    app.footer(config_key_reference());
    app.require_subcommand(1);

    std::string config_path, out_dir;
    std::vector<double> scan_values;
    int jobs = 2;
    BarrierCheckArgs bargs;

    auto add_common = [&](CLI::App* sub, bool config_required) {
        auto* opt = sub->add_option("--config", config_path, "scenario config file (INI)");
        if (config_required) opt->required();
        sub->add_option("--out", out_dir,
                        "output directory (default $PMELAB_OUT/<subcommand>)");
    };

    auto* solve_cmd = app.add_subcommand("solve", "evolve the drift equation from a config");
    add_common(solve_cmd, true);
    auto* l34 = app.add_subcommand(
        "lemma34", "mass-threshold to pointwise-pressure propagation experiment");
    add_common(l34, true);
    auto* eq2 = app.add_subcommand(
        "eq2", "sink-equation diagnostics: containment, drainage, lower-bound chain");
    add_common(eq2, true);
    auto* l35 =
        app.add_subcommand("lemma35", "small-mass decay experiment (optionally a c0 scan)");
    add_common(l35, true);
    l35->add_option("--scan", scan_values, "comma list of c0 values to scan")->delimiter(',');
    auto* conv = app.add_subcommand(
        "converge", "free-boundary convergence rates toward the equilibrium support");
    add_common(conv, true);
    auto* bc = app.add_subcommand("barrier-check",
                                  "refinement sweep of the drained-barrier residual");
    bc->add_option("--m", bargs.m, "diffusion exponent");
    bc->add_option("--dim", bargs.dim, "dimension (1 or 2)");
    bc->add_option("--a", bargs.a, "scale parameter a");
    bc->add_option("--refine", bargs.refine, "number of refinement levels");
    bc->add_option("--lambda", bargs.lambda, "profile exponent override");
    bc->add_option("--c1", bargs.c1, "drift constant override");
    bc->add_option("--cells", bargs.base_cells, "coarsest cell count");
    bc->add_option("--out", bargs.out, "output directory");
    auto* suite = app.add_subcommand("suite", "fast invariant battery");
    add_common(suite, false);
    suite->add_option("--jobs", jobs, "parallel scenario runs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << app.help() << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(config_path, out_dir);
        if (l34->parsed()) return cmd_lemma34(config_path, out_dir);
        if (eq2->parsed()) return cmd_eq2(config_path, out_dir);
        if (l35->parsed()) return cmd_lemma35(config_path, out_dir, scan_values);
        if (conv->parsed()) return cmd_converge(config_path, out_dir);
        if (bc->parsed()) return cmd_barrier_check(bargs);
        if (suite->parsed()) return cmd_suite(config_path, out_dir, jobs);
    } catch (const RegimeError& e) {
        std::cerr << "regime error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const SolverAbort& e) {
        std::cerr << "runtime abort at t = " << e.time() << ": " << e.what() << "\n";
        return kExitAbort;
    } catch (const std::exception& e) {
        std::cerr << "runtime abort: " << e.what() << "\n";
        return kExitAbort;
    }
    return kExitConfig;
}
