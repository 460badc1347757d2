#pragma once

#include "seaplan/velocity_obstacle.hpp"
#include "seaplan/vessel.hpp"

#include <string>

namespace seaplan {

enum class EncounterKind {
    HeadOn,
    CrossingGiveWay,
    CrossingStandOn,
    Overtaking,  // ego overtakes the target
    Overtaken,   // target overtakes the ego
    NoRule,
};

enum class Side { L, R };

struct SideSelection {
    Side side = Side::R;
    EncounterKind reason = EncounterKind::NoRule;
};

/// Angular thresholds of the encounter decision table. All in degrees;
/// beta is the relative bearing of the target from the ego (clockwise from
/// the ego heading, in (-180, 180]) and dh the wrapped heading difference.
struct ColregsConfig {
    double headon_band_deg = 5.0;        // |dh -/+ 180| band for head-on
    double headon_bearing_deg = 22.5;    // |beta| limit for head-on
    double crossing_min_deg = 5.0;       // crossing band lower |beta| bound
    double crossing_max_deg = 112.5;     // abaft-beam limit
    double overtake_bearing_deg = 67.5;  // |beta| limit for overtaking
    double overtake_heading_deg = 22.5;  // |dh| limit for overtaking
    double overtaken_bearing_deg = 112.5;
};

/// Deterministic classification from relative bearing, heading difference
/// and the speed relation. NoRule is the catch-all.
EncounterKind classify(const VesselState& ego, const VesselState& target,
                       const ColregsConfig& cfg = {});

/// Rules 13-15 force the starboard half-plane; stand-on, overtaken and
/// unclassified encounters keep the side whose constraint the current
/// velocity satisfies best (ties toward R).
SideSelection select_side(EncounterKind kind, const VelocityObstacleRegion& vo,
                          Vec2 v_curr);

const char* to_string(EncounterKind kind);
const char* to_string(Side side);

}  // namespace seaplan
