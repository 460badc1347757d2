#pragma once

#include "seaplan/circle_cover.hpp"
#include "seaplan/safe_velocity.hpp"
#include "seaplan/vessel.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace seaplan {

/// Declarative simulation input. Regions may arrive as raw polygons
/// (convexified once at run start) or as a precomputed circle cover.
struct Scenario {
    std::string name;
    VesselState ego;
    Vec2 goal;
    std::vector<VesselState> targets;
    std::vector<Polygon> regions;
    std::vector<Disc> precomputed_cover;  // used when has_precomputed_cover
    bool has_precomputed_cover = false;
    double dt_s = 0.1;
    double horizon_s = 1000.0;
    double goal_radius_m = 100.0;
    PlannerParams planner;
    RiskThresholds risk;
    UncertaintyBounds uncertainty;
    ColregsConfig colregs;
    CoverConfig cover_config;
    uint64_t seed = 0;
};

void validate_scenario(const Scenario& scn);

struct StepRecord {
    double t = 0.0;
    Vec2 ego_position;
    Vec2 ego_velocity;
    std::vector<Vec2> target_positions;  // aligned with TrajectoryLog::target_ids
    Vec2 v_ref;
    Vec2 v_star;
    Vec2 v_next;
    bool feasible = true;
    std::vector<std::string> active_constraints;
    double qp_time_s = 0.0;
};

struct TrajectoryLog {
    std::vector<std::string> target_ids;
    std::vector<StepRecord> steps;
};

struct ColregsEvent {
    double t = 0.0;
    std::string target;
    EncounterKind kind = EncounterKind::NoRule;
    Side side = Side::R;
};

struct Metrics {
    double min_separation_m = std::numeric_limits<double>::infinity();
    double path_length_m = 0.0;
    bool goal_reached = false;
    double goal_time_s = -1.0;
    double qp_time_mean_s = 0.0;
    double qp_time_max_s = 0.0;
    int grounding_violations = 0;
    std::vector<ColregsEvent> colregs_events;
};

struct RunResult {
    TrajectoryLog log;
    Metrics metrics;
    std::vector<CircleCover> covers;    // one per region when convexified here
    std::vector<Disc> cover_circles;    // flattened grounding constraints
};

/// Ballistic advance of one vessel by dt (explicit Euler).
VesselState advance(const VesselState& state, double dt);

/// Deterministic fixed-step run: targets move ballistically, the ego
/// follows plan_step's acceleration-limited command, one record per step
/// until the horizon or the goal radius. Throws ScenarioInvalid when the
/// world starts already in conflict (step 0) or the scenario is malformed.
RunResult run(const Scenario& scn);

/// Audits a complete log: every step must keep center distance above the
/// pair's combined radius for every target and the ego outside every
/// original shallow polygon (boundary counts as inside).
bool check_collision_free(const TrajectoryLog& log,
                          const std::function<double(size_t)>& combined_radius,
                          std::span<const Polygon> regions);

}  // namespace seaplan
