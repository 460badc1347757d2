#pragma once

#include "seaplan/geometry.hpp"

namespace seaplan {

/// Relative kinematics of one ego/target pair: p_ab = target position
/// minus ego position, v_ab = ego velocity minus target velocity. With
/// these signs the separation at time t is ||p_ab - v_ab * t||.
struct RelativeKinematics {
    Vec2 p_ab;  // m
    Vec2 v_ab;  // m/s
};

inline RelativeKinematics relative_kinematics(Vec2 ego_pos, Vec2 ego_vel,
                                              Vec2 target_pos, Vec2 target_vel) {
    return {target_pos - ego_pos, ego_vel - target_vel};
}

struct RiskThresholds {
    double tcpa_max_s = 600.0;
    double dcpa_max_m = 1000.0;
};

/// Time to closest point of approach under constant velocities. Returns 0
/// when the relative speed is below 1e-6 m/s (closest approach is the
/// current configuration); may be negative for diverging vessels.
double tcpa(const RelativeKinematics& rk);

/// Distance at closest point of approach; the current distance when the
/// pair is diverging (TCPA <= 0) or relative motion is degenerate.
double dcpa(const RelativeKinematics& rk);

/// Constraint gate: the target contributes constraints this step iff
/// 0 <= TCPA <= tcpa_max and DCPA <= dcpa_max, or the pair is already
/// closer than the DCPA threshold.
bool is_active_threat(const RelativeKinematics& rk, const RiskThresholds& th);

}  // namespace seaplan
