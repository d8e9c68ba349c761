#pragma once

#include <string>

#include "simplexflows/configuration.hpp"
#include "simplexflows/flows.hpp"

namespace simplexflows {

/// Configuration file format: {"kind": "K"|"L", "n": int,
/// "points": [[x...], ...]}. All CLI-facing geometry round-trips through it.
Configuration read_configuration(const std::string& path);
Configuration parse_configuration(const std::string& json_text);
std::string configuration_json(const Configuration& config);
void write_configuration(const Configuration& config, const std::string& path);

/// Trajectory output: JSON lines, one record {"t": ..., "points": [...]} per
/// time sample.
void write_trajectory_jsonl(const Trajectory& trajectory, std::ostream& out);
void write_trajectory_jsonl(const Trajectory& trajectory, const std::string& path);
Trajectory read_trajectory_jsonl(const std::string& path);

/// OBJ frame dump for n = 3: one file per sample (frame_0000.obj, ...) with
/// the points as vertices and all pairwise edges as lines.
void write_trajectory_obj(const Trajectory& trajectory, const std::string& directory);

}  // namespace simplexflows
