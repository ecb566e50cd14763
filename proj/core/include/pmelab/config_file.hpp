#pragma once

#include <iosfwd>
#include <string>

#include "pmelab/scenario.hpp"

namespace pmelab {

/// Parses the INI-style scenario format: sections [scenario], [solver],
/// [grid], [potential], [output]; key = value lines; '#' or ';' comments.
/// Unknown sections or keys and duplicate keys are errors carrying the line
/// number. Missing keys take the documented defaults.
ScenarioConfig load_config(std::istream& is, const std::string& origin = "<stream>");
ScenarioConfig load_config(const std::string& path);

/// Canonical serialization; load_config(serialize_config(cfg)) == cfg.
std::string serialize_config(const ScenarioConfig& cfg);

bool config_equal(const ScenarioConfig& a, const ScenarioConfig& b);

/// One line per known key, for --help output.
std::string config_key_reference();

} // namespace pmelab
