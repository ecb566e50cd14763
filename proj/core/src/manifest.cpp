#include "pmelab/manifest.hpp"

#include "json.hpp"
#include "pmelab/report_io.hpp"

namespace pmelab {

std::string RunManifest::to_json() const {
    nlohmann::ordered_json j;
    j["tool_version"] = kToolVersion;
    j["subcommand"] = subcommand;
    j["seed"] = seed;
    j["config"] = config_text;
    nlohmann::ordered_json arts = nlohmann::ordered_json::array();
    for (const auto& [role, path] : artifacts) {
        nlohmann::ordered_json a;
        a["role"] = role;
        a["path"] = path;
        arts.push_back(a);
    }
    j["artifacts"] = arts;
    nlohmann::ordered_json clocks = nlohmann::ordered_json::object();
    for (const auto& [stage, sec] : wall_clock_s) clocks[stage] = sec;
    j["wall_clock_s"] = clocks;
    nlohmann::ordered_json outs = nlohmann::ordered_json::object();
    for (const auto& [name, outcome] : outcomes) outs[name] = outcome;
    j["outcomes"] = outs;
    return j.dump(2) + "\n";
}

void RunManifest::write(const std::string& path) const { write_text_file(path, to_json()); }

} // namespace pmelab
