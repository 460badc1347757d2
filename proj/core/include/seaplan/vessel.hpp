#pragma once

#include "seaplan/geometry.hpp"

#include <string>

namespace seaplan {

/// State of one vessel. velocity, heading and speed are kept consistent:
/// velocity = speed * (cos heading, sin heading) with heading in degrees
/// clockwise from North.
struct VesselState {
    std::string id;
    Vec2 position;       // m, (N, E)
    Vec2 velocity;       // m/s
    double heading_deg = 0.0;
    double speed_mps = 0.0;
    double radius_m = 250.0;
};

inline VesselState make_vessel(std::string id, Vec2 position, double heading_deg,
                               double speed_mps, double radius_m) {
    VesselState s;
    s.id = std::move(id);
    s.position = position;
    s.heading_deg = heading_deg;
    s.speed_mps = speed_mps;
    s.radius_m = radius_m;
    s.velocity = heading_to_velocity(heading_deg, speed_mps);
    return s;
}

/// Replaces the velocity, re-deriving heading and speed. A zero velocity
/// keeps the previous heading (any heading is consistent with speed 0).
inline void set_velocity(VesselState& s, Vec2 v) {
    s.velocity = v;
    s.speed_mps = v.norm();
    if (s.speed_mps > 1e-9) s.heading_deg = heading_from_velocity(v);
}

}  // namespace seaplan
