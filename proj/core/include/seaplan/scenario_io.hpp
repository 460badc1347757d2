#pragma once

#include "seaplan/circle_cover.hpp"
#include "seaplan/simulator.hpp"

#include <span>
#include <string>

namespace seaplan {

/// Shortest round-trip decimal for v ("-0" normalized to "0"). All file
/// output goes through this so identical runs serialize byte-identically.
std::string format_double(double v);

/// Region files: either a bare JSON array of [north_m, east_m] pairs or an
/// object with a "region" key holding one.
Polygon region_from_json(const std::string& text);
std::string region_to_json(const Polygon& poly);

/// Scenario files. base_dir resolves a relative "cover_file" reference.
/// Throws SchemaError with a path-qualified message on malformed input.
Scenario scenario_from_json(const std::string& text, const std::string& base_dir = ".");
std::string scenario_to_json(const Scenario& scn);

/// Single-region cover document: region, circles, spill ratio and solver
/// summary. Wall-clock solver time serializes as 0 unless include_timing
/// is set (canonical outputs stay reproducible).
std::string cover_to_json(const CircleCover& cover, bool include_timing = false);
CircleCover cover_from_json(const std::string& text);

/// Multi-region document {"regions": [<single-region cover>, ...]}.
std::string covers_to_json(std::span<const CircleCover> covers, bool include_timing = false);
std::vector<CircleCover> covers_from_json(const std::string& text);

/// Fixed column order: t, ego_n, ego_e, ego_vn, ego_ve, one n/e pair per
/// target, feasible, qp_ms, tags (';'-joined). qp_ms serializes as 0
/// unless include_timing is set.
std::string trajectory_to_csv(const TrajectoryLog& log, bool include_timing = false);
TrajectoryLog trajectory_from_csv(const std::string& text);

std::string metrics_to_json(const Metrics& metrics, bool include_timing = false);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace seaplan
