#include "pmelab/scenario.hpp"

#include <cmath>
#include <cstdio>

#include "pmelab/barenblatt.hpp"
#include "pmelab/measure.hpp"
#include "pmelab/transforms.hpp"

namespace pmelab {

std::string to_string(InitialKind k) {
    switch (k) {
    case InitialKind::zero: return "zero";
    case InitialKind::bump: return "bump";
    case InitialKind::barenblatt: return "barenblatt";
    case InitialKind::capped_indicator: return "capped_indicator";
    case InitialKind::scaled_equilibrium: return "scaled_equilibrium";
    case InitialKind::equilibrium: return "equilibrium";
    }
    return "unknown";
}

InitialKind initial_kind_from_string(const std::string& s) {
    if (s == "zero") return InitialKind::zero;
    if (s == "bump") return InitialKind::bump;
    if (s == "barenblatt") return InitialKind::barenblatt;
    if (s == "capped_indicator") return InitialKind::capped_indicator;
    if (s == "scaled_equilibrium") return InitialKind::scaled_equilibrium;
    if (s == "equilibrium") return InitialKind::equilibrium;
    throw ConfigError("unknown initial data kind: " + s);
}

double ScenarioConfig::resolved_C1() const {
    if (C1 >= 0.0) return C1;
    RegionBall unit_ball{x0, 1.0};
    return potential.c2_norm_bound(unit_ball, dim);
}

double ScenarioConfig::resolved_C2() const {
    if (C2 >= 0.0) return C2;
    const double mt = mtilde_value();
    return 2.0 * resolved_C1() / (mt - 1.0);
}

double ScenarioConfig::resolved_k_prime() const {
    if (k_prime >= 0.0) return k_prime;
    return 1.0 - lambda_exponent(m, dim);
}

double ScenarioConfig::resolved_kappa_radius() const {
    return kappa_radius >= 0.0 ? kappa_radius : hypothesis_radius + 1.0;
}

double ScenarioConfig::mtilde_value() const { return mtilde(m, resolved_C1() * a); }

void ScenarioConfig::validate_common() const {
    if (!(m > 1.0)) throw ConfigError("scenario: m must be > 1");
    if (dim != 1 && dim != 2) throw ConfigError("scenario: dim must be 1 or 2");
    if (!(a > 0.0)) throw ConfigError("scenario: a must be > 0");
    if (!(gamma > 0.0 && gamma < 1.0)) throw ConfigError("scenario: gamma must lie in (0,1)");
}

void ScenarioConfig::validate_lemma34_regime() const {
    validate_common();
    char buf[192];
    if (!(m < 2.0)) {
        std::snprintf(buf, sizeof(buf),
                      "lemma34 regime: requires 1<m<2, got m = %.6g", m);
        throw RegimeError(buf);
    }
    if (!(k > 0.0 && k < 1.0)) {
        std::snprintf(buf, sizeof(buf), "lemma34 regime: requires 0<k<1, got k = %.6g", k);
        throw RegimeError(buf);
    }
    const double c1 = resolved_C1();
    const double a0 = c1 > 0.0 ? (2.0 - m) / c1 : std::numeric_limits<double>::infinity();
    if (!(a < a0)) {
        std::snprintf(buf, sizeof(buf),
                      "lemma34 regime: requires a < a0 = (2-m)/C1 = %.6g (C1 = %.6g), got a = %.6g",
                      a0, c1, a);
        throw RegimeError(buf);
    }
    TransformParams tp{a, x0, t0, c1, m};
    tp.validate_tilted_regime();
}

double unit_pressure_density(double m) {
    return std::pow((m - 1.0) / m, 1.0 / (m - 1.0));
}

namespace {

ScalarField parabolic_bump(const Grid& grid, const Pt& center, double radius, double height) {
    return sample_field(grid, FieldKind::density, 0.0, [&](const Pt& x) {
        const double r = distance(x, center, grid.dim());
        const double v = 1.0 - (r * r) / (radius * radius);
        return v > 0.0 ? height * v : 0.0;
    });
}

} // namespace

ScalarField make_initial_data(const ScenarioConfig& cfg) {
    const Grid grid = cfg.grid.make(cfg.dim);
    switch (cfg.initial.kind) {
    case InitialKind::zero: return ScalarField(grid, FieldKind::density, cfg.t0);
    case InitialKind::bump: {
        double height = cfg.initial.height;
        if (height <= 0.0) height = 1.0;
        ScalarField f = parabolic_bump(grid, cfg.initial.center, cfg.initial.radius, height);
        if (cfg.initial.mass > 0.0) {
            const double m0 = mass(f);
            if (m0 <= 0.0) throw ConfigError("initial bump: empty on this grid");
            const double s = cfg.initial.mass / m0;
            for (std::size_t c = 0; c < f.size(); ++c) f[c] *= s;
        }
        f.set_time_stamp(cfg.t0);
        return f;
    }
    case InitialKind::barenblatt: {
        BarenblattParams bp;
        bp.C = cfg.initial.barenblatt_C;
        bp.lambda = lambda_exponent(cfg.m, cfg.dim);
        bp.center = cfg.initial.center;
        ScalarField f = barenblatt_density_field(bp, cfg.m, grid, 0.0);
        f.set_time_stamp(cfg.t0);
        return f;
    }
    case InitialKind::capped_indicator: {
        const double cap = unit_pressure_density(cfg.m);
        ScalarField f = sample_field(grid, FieldKind::density, cfg.t0, [&](const Pt& x) {
            return distance(x, cfg.initial.center, grid.dim()) <= cfg.initial.radius ? cap : 0.0;
        });
        return f;
    }
    case InitialKind::scaled_equilibrium: {
        const double s = cfg.initial.pressure_scale;
        if (!(s > 0.0)) throw ConfigError("scaled_equilibrium: pressure_scale must be > 0");
        ScalarField u = sample_field(grid, FieldKind::pressure, cfg.t0, [&](const Pt& x) {
            const double v = cfg.initial.cbar - s * cfg.potential.value(x, grid.dim());
            return v > 0.0 ? v : 0.0;
        });
        u.set_pressure_cap(std::max(1.0, u.max_value()));
        ScalarField f = density_of_pressure(u, cfg.m);
        f.set_time_stamp(cfg.t0);
        return f;
    }
    case InitialKind::equilibrium: {
        const double target = cfg.initial.mass > 0.0 ? cfg.initial.mass : 1.0 / 3.0;
        auto eq = compute_equilibrium(cfg.potential, target, grid, cfg.m);
        ScalarField f = density_of_pressure(eq.pressure, cfg.m);
        f.set_time_stamp(cfg.t0);
        return f;
    }
    }
    throw ConfigError("initial data: unknown kind");
}

ScalarField lemma34_hypothesis_data(const ScenarioConfig& cfg) {
    const Grid grid = cfg.grid.make(cfg.dim);
    ScalarField unit = parabolic_bump(grid, cfg.x0, 2.0 * cfg.a, 1.0);
    const RegionBall ball{cfg.x0, cfg.a};
    const double avg = ball_average(unit, ball);
    if (!(avg > 0.0)) throw ConfigError("lemma34 data: hypothesis ball under-resolved");
    const double target = std::pow(cfg.a, cfg.k) * (1.0 + 1e-6);
    ScalarField f = unit;
    for (std::size_t c = 0; c < f.size(); ++c) f[c] = unit[c] * (target / avg);
    f.set_time_stamp(cfg.t0);
    return f;
}

} // namespace pmelab
