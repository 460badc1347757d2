#include "seaplan/colregs.hpp"

namespace seaplan {

EncounterKind classify(const VesselState& ego, const VesselState& target,
                       const ColregsConfig& cfg) {
    const double beta = wrap_deg_180(bearing_deg(ego.position, target.position) - ego.heading_deg);
    const double dh = wrap_deg_180(target.heading_deg - ego.heading_deg);

    const bool reciprocal = std::abs(wrap_deg_180(dh - 180.0)) <= cfg.headon_band_deg;
    if (std::abs(beta) <= cfg.headon_bearing_deg && reciprocal) return EncounterKind::HeadOn;

    if (std::abs(beta) <= cfg.overtake_bearing_deg &&
        std::abs(dh) <= cfg.overtake_heading_deg && ego.speed_mps > target.speed_mps)
        return EncounterKind::Overtaking;

    if (beta > cfg.crossing_min_deg && beta <= cfg.crossing_max_deg)
        return EncounterKind::CrossingGiveWay;
    if (beta < -cfg.crossing_min_deg && beta >= -cfg.crossing_max_deg)
        return EncounterKind::CrossingStandOn;

    if (std::abs(beta) > cfg.overtaken_bearing_deg && target.speed_mps > ego.speed_mps)
        return EncounterKind::Overtaken;

    return EncounterKind::NoRule;
}

SideSelection select_side(EncounterKind kind, const VelocityObstacleRegion& vo,
                          Vec2 v_curr) {
    switch (kind) {
        case EncounterKind::HeadOn:
        case EncounterKind::CrossingGiveWay:
        case EncounterKind::Overtaking:
            return {Side::R, kind};
        default:
            break;
    }
    const double margin_l = half_plane_margin(vo.left, v_curr);
    const double margin_r = half_plane_margin(vo.right, v_curr);
    return {margin_l > margin_r ? Side::L : Side::R, kind};
}

const char* to_string(EncounterKind kind) {
    switch (kind) {
        case EncounterKind::HeadOn: return "head_on";
        case EncounterKind::CrossingGiveWay: return "crossing_give_way";
        case EncounterKind::CrossingStandOn: return "crossing_stand_on";
        case EncounterKind::Overtaking: return "overtaking";
        case EncounterKind::Overtaken: return "overtaken";
        case EncounterKind::NoRule: return "no_rule";
    }
    return "unknown";
}

const char* to_string(Side side) {
    return side == Side::L ? "L" : "R";
}

}  // namespace seaplan
