#include "pmelab/config_file.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "pmelab/field_io.hpp"

namespace pmelab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct Entry {
    std::string value;
    int line = 0;
};

using Section = std::map<std::string, Entry>;

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    std::ostringstream os;
    os << origin << ":" << line << ": " << msg;
    throw ConfigError(os.str());
}

double to_double(const std::string& origin, const std::string& key, const Entry& e) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(e.value, &pos);
        if (pos != e.value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        fail(origin, e.line, "key '" + key + "': cannot parse '" + e.value + "' as a number");
    }
}

int to_int(const std::string& origin, const std::string& key, const Entry& e) {
    const double v = to_double(origin, key, e);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        fail(origin, e.line, "key '" + key + "': expected an integer, got '" + e.value + "'");
    return i;
}

bool to_bool(const std::string& origin, const std::string& key, const Entry& e) {
    if (e.value == "true" || e.value == "1" || e.value == "on") return true;
    if (e.value == "false" || e.value == "0" || e.value == "off") return false;
    fail(origin, e.line, "key '" + key + "': expected a boolean, got '" + e.value + "'");
}

std::vector<double> to_list(const std::string& origin, const std::string& key, const Entry& e) {
    std::vector<double> out;
    std::stringstream ss(e.value);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        Entry sub{tok, e.line};
        out.push_back(to_double(origin, key, sub));
    }
    return out;
}

Pt to_pt(const std::string& origin, const std::string& key, const Entry& e) {
    const auto xs = to_list(origin, key, e);
    if (xs.empty() || xs.size() > 2)
        fail(origin, e.line, "key '" + key + "': expected one or two coordinates");
    Pt p;
    p[0] = xs[0];
    if (xs.size() == 2) p[1] = xs[1];
    return p;
}

const std::map<std::string, std::set<std::string>>& known_keys() {
    static const std::map<std::string, std::set<std::string>> keys = {
        {"scenario",
         {"m", "dim", "a", "k", "k_prime", "gamma", "c0", "c1", "c2", "x0", "t0", "t1",
          "hypothesis_radius", "kappa_radius", "seed", "initial", "initial_radius",
          "initial_height", "initial_mass", "initial_center", "initial_cbar",
          "initial_pressure_scale", "initial_barenblatt_c"}},
        {"grid", {"lower", "upper", "cells"}},
        {"solver", {"cfl", "end_time", "snapshots", "support_guard", "positivity_floor"}},
        {"potential", {"form", "b", "amp", "omega", "coeffs", "center"}},
        {"output", {"write_fields", "write_svg", "mass_check"}},
    };
    return keys;
}

} // namespace

ScenarioConfig load_config(std::istream& is, const std::string& origin) {
    std::map<std::string, Section> sections;
    std::string line, current;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail(origin, lineno, "unterminated section header");
            current = trim(line.substr(1, line.size() - 2));
            if (!known_keys().count(current))
                fail(origin, lineno, "unknown section [" + current + "]");
            sections[current]; // created even when empty
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(origin, lineno, "expected key = value");
        if (current.empty()) fail(origin, lineno, "key outside any section");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!known_keys().at(current).count(key))
            fail(origin, lineno, "unknown key '" + key + "' in [" + current + "]");
        auto [it, inserted] = sections[current].emplace(key, Entry{value, lineno});
        if (!inserted) fail(origin, lineno, "duplicate key '" + key + "' in [" + current + "]");
    }

    ScenarioConfig cfg;
    auto get = [&](const std::string& sec, const std::string& key) -> const Entry* {
        auto s = sections.find(sec);
        if (s == sections.end()) return nullptr;
        auto k = s->second.find(key);
        return k == s->second.end() ? nullptr : &k->second;
    };

    // [scenario]
    if (auto* e = get("scenario", "m")) cfg.m = to_double(origin, "m", *e);
    if (auto* e = get("scenario", "dim")) cfg.dim = to_int(origin, "dim", *e);
    if (auto* e = get("scenario", "a")) cfg.a = to_double(origin, "a", *e);
    if (auto* e = get("scenario", "k")) cfg.k = to_double(origin, "k", *e);
    if (auto* e = get("scenario", "k_prime")) cfg.k_prime = to_double(origin, "k_prime", *e);
    if (auto* e = get("scenario", "gamma")) cfg.gamma = to_double(origin, "gamma", *e);
    if (auto* e = get("scenario", "c0")) cfg.c0 = to_double(origin, "c0", *e);
    if (auto* e = get("scenario", "c1")) cfg.C1 = to_double(origin, "c1", *e);
    if (auto* e = get("scenario", "c2")) cfg.C2 = to_double(origin, "c2", *e);
    if (auto* e = get("scenario", "x0")) cfg.x0 = to_pt(origin, "x0", *e);
    if (auto* e = get("scenario", "t0")) cfg.t0 = to_double(origin, "t0", *e);
    if (auto* e = get("scenario", "t1")) cfg.t1 = to_double(origin, "t1", *e);
    if (auto* e = get("scenario", "hypothesis_radius"))
        cfg.hypothesis_radius = to_double(origin, "hypothesis_radius", *e);
    if (auto* e = get("scenario", "kappa_radius"))
        cfg.kappa_radius = to_double(origin, "kappa_radius", *e);
    if (auto* e = get("scenario", "seed"))
        cfg.seed = static_cast<unsigned>(to_int(origin, "seed", *e));
    if (auto* e = get("scenario", "initial")) {
        try {
            cfg.initial.kind = initial_kind_from_string(e->value);
        } catch (const ConfigError& err) {
            fail(origin, e->line, err.what());
        }
    }
    if (auto* e = get("scenario", "initial_radius"))
        cfg.initial.radius = to_double(origin, "initial_radius", *e);
    if (auto* e = get("scenario", "initial_height"))
        cfg.initial.height = to_double(origin, "initial_height", *e);
    if (auto* e = get("scenario", "initial_mass"))
        cfg.initial.mass = to_double(origin, "initial_mass", *e);
    if (auto* e = get("scenario", "initial_center"))
        cfg.initial.center = to_pt(origin, "initial_center", *e);
    if (auto* e = get("scenario", "initial_cbar"))
        cfg.initial.cbar = to_double(origin, "initial_cbar", *e);
    if (auto* e = get("scenario", "initial_pressure_scale"))
        cfg.initial.pressure_scale = to_double(origin, "initial_pressure_scale", *e);
    if (auto* e = get("scenario", "initial_barenblatt_c"))
        cfg.initial.barenblatt_C = to_double(origin, "initial_barenblatt_c", *e);

    // [grid]
    if (auto* e = get("grid", "lower")) cfg.grid.lower = to_double(origin, "lower", *e);
    if (auto* e = get("grid", "upper")) cfg.grid.upper = to_double(origin, "upper", *e);
    if (auto* e = get("grid", "cells")) cfg.grid.cells = to_int(origin, "cells", *e);

    // [solver]
    if (auto* e = get("solver", "cfl")) cfg.solver.cfl_fraction = to_double(origin, "cfl", *e);
    if (auto* e = get("solver", "end_time"))
        cfg.solver.end_time = to_double(origin, "end_time", *e);
    if (auto* e = get("solver", "snapshots"))
        cfg.solver.snapshot_times = to_list(origin, "snapshots", *e);
    if (auto* e = get("solver", "support_guard"))
        cfg.solver.support_guard = to_double(origin, "support_guard", *e);
    if (auto* e = get("solver", "positivity_floor"))
        cfg.solver.positivity_floor = to_double(origin, "positivity_floor", *e);

    // [potential]
    {
        PotentialForm form = cfg.potential.form();
        Pt center = cfg.potential.center();
        double b = 1.0, amp = 1.0, omega = 1.0;
        std::vector<double> coeffs;
        if (auto* e = get("potential", "form")) {
            try {
                form = potential_form_from_string(e->value);
            } catch (const std::exception& ex) {
                fail(origin, e->line, ex.what());
            }
        }
        if (auto* e = get("potential", "b")) b = to_double(origin, "b", *e);
        if (auto* e = get("potential", "amp")) amp = to_double(origin, "amp", *e);
        if (auto* e = get("potential", "omega")) omega = to_double(origin, "omega", *e);
        if (auto* e = get("potential", "coeffs")) coeffs = to_list(origin, "coeffs", *e);
        if (auto* e = get("potential", "center")) center = to_pt(origin, "center", *e);
        switch (form) {
        case PotentialForm::none: cfg.potential = PotentialSpec::none(); break;
        case PotentialForm::quadratic: cfg.potential = PotentialSpec::quadratic(center); break;
        case PotentialForm::scaled_quadratic:
            cfg.potential = PotentialSpec::scaled_quadratic(b, center);
            break;
        case PotentialForm::cosine_well:
            cfg.potential = PotentialSpec::cosine_well(amp, omega, center);
            break;
        case PotentialForm::polynomial:
            cfg.potential = PotentialSpec::polynomial(coeffs, center);
            break;
        }
    }

    // [output]
    if (auto* e = get("output", "write_fields"))
        cfg.output.write_fields = to_bool(origin, "write_fields", *e);
    if (auto* e = get("output", "write_svg"))
        cfg.output.write_svg = to_bool(origin, "write_svg", *e);
    if (auto* e = get("output", "mass_check")) {
        if (e->value != "auto" && e->value != "on" && e->value != "off")
            fail(origin, e->line, "mass_check must be auto|on|off");
        cfg.output.mass_check = e->value;
    }

    cfg.validate_common();
    cfg.grid.make(cfg.dim); // validates spacing and cell count
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file: " + path);
    return load_config(is, path);
}

namespace {

std::string pt_to_string(const Pt& p, int dim) {
    std::string s = format_double(p[0]);
    if (dim == 2) s += "," + format_double(p[1]);
    return s;
}

} // namespace

std::string serialize_config(const ScenarioConfig& cfg) {
    std::ostringstream os;
    os << "[scenario]\n";
    os << "m = " << format_double(cfg.m) << "\n";
    os << "dim = " << cfg.dim << "\n";
    os << "a = " << format_double(cfg.a) << "\n";
    os << "k = " << format_double(cfg.k) << "\n";
    os << "k_prime = " << format_double(cfg.k_prime) << "\n";
    os << "gamma = " << format_double(cfg.gamma) << "\n";
    os << "c0 = " << format_double(cfg.c0) << "\n";
    os << "c1 = " << format_double(cfg.C1) << "\n";
    os << "c2 = " << format_double(cfg.C2) << "\n";
    os << "x0 = " << pt_to_string(cfg.x0, cfg.dim) << "\n";
    os << "t0 = " << format_double(cfg.t0) << "\n";
    os << "t1 = " << format_double(cfg.t1) << "\n";
    os << "hypothesis_radius = " << format_double(cfg.hypothesis_radius) << "\n";
    os << "kappa_radius = " << format_double(cfg.kappa_radius) << "\n";
    os << "seed = " << cfg.seed << "\n";
    os << "initial = " << to_string(cfg.initial.kind) << "\n";
    os << "initial_radius = " << format_double(cfg.initial.radius) << "\n";
    os << "initial_height = " << format_double(cfg.initial.height) << "\n";
    os << "initial_mass = " << format_double(cfg.initial.mass) << "\n";
    os << "initial_center = " << pt_to_string(cfg.initial.center, cfg.dim) << "\n";
    os << "initial_cbar = " << format_double(cfg.initial.cbar) << "\n";
    os << "initial_pressure_scale = " << format_double(cfg.initial.pressure_scale) << "\n";
    os << "initial_barenblatt_c = " << format_double(cfg.initial.barenblatt_C) << "\n";
    os << "\n[grid]\n";
    os << "lower = " << format_double(cfg.grid.lower) << "\n";
    os << "upper = " << format_double(cfg.grid.upper) << "\n";
    os << "cells = " << cfg.grid.cells << "\n";
    os << "\n[solver]\n";
    os << "cfl = " << format_double(cfg.solver.cfl_fraction) << "\n";
    os << "end_time = " << format_double(cfg.solver.end_time) << "\n";
    if (!cfg.solver.snapshot_times.empty()) {
        os << "snapshots = ";
        for (std::size_t i = 0; i < cfg.solver.snapshot_times.size(); ++i)
            os << (i ? "," : "") << format_double(cfg.solver.snapshot_times[i]);
        os << "\n";
    }
    os << "support_guard = " << format_double(cfg.solver.support_guard) << "\n";
    os << "positivity_floor = " << format_double(cfg.solver.positivity_floor) << "\n";
    os << "\n[potential]\n";
    os << "form = " << to_string(cfg.potential.form()) << "\n";
    if (cfg.potential.form() == PotentialForm::scaled_quadratic)
        os << "b = " << format_double(cfg.potential.param_b()) << "\n";
    if (cfg.potential.form() == PotentialForm::cosine_well) {
        os << "amp = " << format_double(cfg.potential.param_amp()) << "\n";
        os << "omega = " << format_double(cfg.potential.param_omega()) << "\n";
    }
    if (cfg.potential.form() == PotentialForm::polynomial) {
        os << "coeffs = ";
        const auto& cs = cfg.potential.coeffs();
        for (std::size_t i = 0; i < cs.size(); ++i) os << (i ? "," : "") << format_double(cs[i]);
        os << "\n";
    }
    if (cfg.potential.form() != PotentialForm::none)
        os << "center = " << pt_to_string(cfg.potential.center(), cfg.dim) << "\n";
    os << "\n[output]\n";
    os << "write_fields = " << (cfg.output.write_fields ? "true" : "false") << "\n";
    os << "write_svg = " << (cfg.output.write_svg ? "true" : "false") << "\n";
    os << "mass_check = " << cfg.output.mass_check << "\n";
    return os.str();
}

bool config_equal(const ScenarioConfig& a, const ScenarioConfig& b) {
    return serialize_config(a) == serialize_config(b);
}

std::string config_key_reference() {
    std::ostringstream os;
    os << "Config file format: INI sections with key = value lines; '#' starts a comment.\n"
       << "Unknown sections, unknown keys and duplicate keys are errors.\n\n"
       << "[scenario] m(1.5) dim(1) a(0.1) k(0.3) k_prime(-1: 1-lambda) gamma(0.5) c0(1e-2)\n"
       << "           c1(-1: C2-norm of the potential over the unit ball at x0)\n"
       << "           c2(-1: 2 c1/(mtilde-1)) x0(0) t0(0) t1(0)\n"
       << "           hypothesis_radius(2) kappa_radius(-1: hypothesis_radius+1) seed(12345)\n"
       << "           initial(bump|zero|barenblatt|capped_indicator|scaled_equilibrium|equilibrium)\n"
       << "           initial_radius(1) initial_height(-1: derived) initial_mass(-1: off)\n"
       << "           initial_center(0) initial_cbar(0.5) initial_pressure_scale(0.5)\n"
       << "           initial_barenblatt_c(1)\n"
       << "[grid]     lower(-4) upper(4) cells(512)\n"
       << "[solver]   cfl(0.45) end_time(scenario-dependent) snapshots(list)\n"
       << "           support_guard(-1: 4h; 0 disables) positivity_floor(0)\n"
       << "[potential] form(quadratic|none|scaled_quadratic|cosine_well|polynomial)\n"
       << "           b(1) amp(1) omega(1) coeffs(list in |x|^2) center(0)\n"
       << "[output]   write_fields(true) write_svg(true) mass_check(auto|on|off)\n";
    return os.str();
}

} // namespace pmelab
