#include "pmelab/report_io.hpp"

#include <fstream>

#include "json.hpp"
#include "pmelab/field_io.hpp"

namespace pmelab {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json checks_json(const std::vector<Check>& checks) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json j;
        j["name"] = c.name;
        j["pass"] = c.pass;
        j["measured"] = c.measured;
        j["threshold"] = c.threshold;
        if (!c.note.empty()) j["note"] = c.note;
        j["informational"] = c.informational;
        arr.push_back(j);
    }
    return arr;
}

ordered_json fit_json(const ExpFit& f, bool valid) {
    ordered_json j;
    j["K"] = f.K;
    j["alpha"] = f.alpha;
    j["r_squared"] = f.r_squared;
    j["points_used"] = f.points_used;
    j["valid"] = valid;
    return j;
}

} // namespace

std::string to_json(const Lemma34Report& r) {
    ordered_json j;
    j["scenario"] = "lemma34";
    j["outcome"] = to_string(r.outcome);
    j["hypothesis_value"] = r.hypothesis_value;
    j["hypothesis_threshold"] = r.hypothesis_threshold;
    j["hypothesis_met"] = r.hypothesis_met;
    j["min_pressure_final"] = r.min_pressure_final;
    j["pressure_threshold"] = r.pressure_threshold;
    j["mtilde"] = r.mtilde_value;
    j["C1a"] = r.C1a;
    j["mass_initial"] = r.mass_initial;
    j["mass_final"] = r.mass_final;
    j["checks"] = checks_json(r.checks);
    return j.dump(2) + "\n";
}

std::string to_json(const Eq2Report& r) {
    ordered_json j;
    j["scenario"] = "eq2";
    j["outcome"] = to_string(r.outcome);
    j["containment"] = r.containment;
    j["worst_excursion"] = r.worst_excursion;
    j["mass_slope"] = r.mass_slope;
    j["expected_slope"] = r.expected_slope;
    j["slope_rel_err"] = r.slope_rel_err;
    j["mid_max"] = r.mid_max;
    j["measured_C4"] = r.measured_C4;
    j["ball_radius"] = r.ball_radius;
    j["ball_bound_pass"] = r.ball_bound_pass;
    j["holder_gamma_hat"] = r.holder_gamma_hat;
    j["gamma_assumed"] = r.gamma_assumed;
    j["domination_gap_same_data"] = r.domination_gap_same_data;
    j["domination_gap_barenblatt"] = r.domination_gap_barenblatt;
    j["hypothesis_met"] = r.hypothesis_met;
    j["checks"] = checks_json(r.checks);
    return j.dump(2) + "\n";
}

std::string to_json(const Lemma35Report& r) {
    ordered_json j;
    j["scenario"] = "lemma35";
    j["outcome"] = to_string(r.outcome);
    j["c0"] = r.c0;
    j["k"] = r.k;
    j["t2"] = r.t2;
    j["max_ball1"] = r.max_ball1;
    j["fitted_C"] = r.fitted_C;
    j["hypothesis_held"] = r.hypothesis_held;
    j["checks"] = checks_json(r.checks);
    return j.dump(2) + "\n";
}

std::string to_json(const Lemma35Scan& r) {
    ordered_json j;
    j["scenario"] = "lemma35_scan";
    j["outcome"] = to_string(r.outcome);
    j["k"] = r.k;
    j["slope"] = r.slope;
    j["c0_values"] = r.c0_values;
    j["max_values"] = r.max_values;
    ordered_json runs = ordered_json::array();
    for (const auto& run : r.runs) runs.push_back(ordered_json::parse(to_json(run)));
    j["runs"] = runs;
    j["checks"] = checks_json(r.checks);
    return j.dump(2) + "\n";
}

std::string to_json(const ConvergenceReport& r) {
    ordered_json j;
    j["scenario"] = "converge";
    j["outcome"] = to_string(r.outcome);
    j["equilibrium_cbar"] = r.equilibrium_cbar;
    j["equilibrium_mass"] = r.equilibrium_mass;
    j["resolution_floor"] = r.rates.resolution_floor;
    j["times"] = r.rates.times;
    j["d_pos"] = r.rates.d_pos;
    j["d_gamma"] = r.rates.d_gamma;
    j["d_pos_fit"] = fit_json(r.rates.pos_fit, r.rates.pos_fit_valid);
    j["d_gamma_fit"] = fit_json(r.rates.gamma_fit, r.rates.gamma_fit_valid);
    // Context constants recorded for completeness; only the gradient floor is
    // measurable in this setting, the others are external hypotheses.
    ordered_json ctx;
    ctx["min_grad_outside_positive_set"] = r.min_grad_outside;
    ctx["k0"] = nullptr;
    ctx["M1"] = nullptr;
    ctx["C0"] = nullptr;
    j["context_constants"] = ctx;
    j["checks"] = checks_json(r.checks);
    return j.dump(2) + "\n";
}

std::string to_json(const GradientBoundReport& r) {
    ordered_json j;
    j["scenario"] = "gradient_bound";
    j["max_aU_minus_c"] = r.max_aU_minus_c;
    j["max_DU_minus_c"] = r.max_DU_minus_c;
    j["slack"] = r.slack;
    j["pass"] = r.pass;
    return j.dump(2) + "\n";
}

std::string rate_series_csv(const RateReport& r) {
    std::string out = "t,d_pos,d_gamma\n";
    for (std::size_t i = 0; i < r.times.size(); ++i)
        out += format_double(r.times[i]) + "," + format_double(r.d_pos[i]) + "," +
               format_double(r.d_gamma[i]) + "\n";
    return out;
}

std::string trajectory_json(const Trajectory& traj) {
    ordered_json j;
    const auto& st = traj.stats();
    j["m"] = traj.config().m;
    j["cfl_fraction"] = traj.config().cfl_fraction;
    j["end_time"] = traj.config().end_time;
    j["steps"] = st.steps;
    j["min_dt"] = st.min_dt;
    j["max_dt"] = st.max_dt;
    j["clamped_mass_total"] = st.clamped_mass_total;
    j["min_value"] = st.min_value;
    j["max_value"] = st.max_value;
    ordered_json snaps = ordered_json::array();
    for (const auto& si : traj.snapshot_info()) {
        ordered_json s;
        s["t"] = si.time;
        s["mass"] = si.mass;
        s["min"] = si.min_value;
        s["max"] = si.max_value;
        snaps.push_back(s);
    }
    j["snapshots"] = snaps;
    return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for write: " + path);
    os << content;
}

} // namespace pmelab
