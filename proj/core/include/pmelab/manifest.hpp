#pragma once

#include <string>
#include <vector>

namespace pmelab {

inline constexpr const char* kToolVersion = "0.1.0";

/// Run metadata written next to the data files. The manifest is the one
/// output allowed to carry wall-clock timings; everything else is
/// byte-deterministic for a fixed config and tool version.
struct RunManifest {
    std::string subcommand;
    std::string config_text;   // resolved config as parsed
    unsigned seed = 0;
    std::vector<std::pair<std::string, std::string>> artifacts; // (role, path)
    std::vector<std::pair<std::string, double>> wall_clock_s;   // (stage, seconds)
    std::vector<std::pair<std::string, std::string>> outcomes;  // (check set, outcome)

    std::string to_json() const;
    void write(const std::string& path) const;
};

} // namespace pmelab
