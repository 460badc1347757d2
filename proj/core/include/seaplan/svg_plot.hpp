#pragma once

#include "seaplan/geometry.hpp"
#include "seaplan/simulator.hpp"

#include <string>
#include <vector>

namespace seaplan {

/// Static SVG of a run: shallow polygons, cover circles, one polyline per
/// vessel trajectory (ego first) and start/end markers for the ego track.
/// North maps up, East right; output is deterministic text.
std::string render_svg(const TrajectoryLog& log, const std::vector<Polygon>& regions,
                       const std::vector<Disc>& circles);

}  // namespace seaplan
