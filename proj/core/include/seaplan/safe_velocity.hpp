#pragma once

#include "seaplan/colregs.hpp"
#include "seaplan/risk.hpp"
#include "seaplan/velocity_obstacle.hpp"
#include "seaplan/vessel.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace seaplan {

/// Half-plane with the provenance of the constraint: "speed:<k>",
/// "target:<id>" or "ground:<idx>".
struct TaggedHalfPlane {
    HalfPlane hp;
    std::string tag;
};

struct ConstraintSet {
    std::vector<TaggedHalfPlane> half_planes;
};

enum class VRefPolicy { TowardGoalAtCruise, FixedProfile };

struct PlannerParams {
    double v_max_mps = 12.0;
    int n_poly = 16;           // >= 8
    double d_max_mps = 0.05;   // max velocity change per step
    double cruise_mps = 10.0;
    VRefPolicy v_ref_policy = VRefPolicy::TowardGoalAtCruise;
    Vec2 fixed_profile;        // used when v_ref_policy == FixedProfile
};

struct EncounterRecord {
    std::string target_id;
    EncounterKind kind = EncounterKind::NoRule;
    Side side = Side::R;
};

struct PlanOutcome {
    Vec2 v_ref;
    Vec2 v_star;    // (0,0) when infeasible
    Vec2 v_next;
    bool feasible = true;
    bool already_in_conflict = false;  // cone construction failed (overlap)
    std::vector<std::string> active_constraints;  // binding at v_star
    std::vector<EncounterRecord> encounters;      // one per constrained vessel
    double solve_time_s = 0.0;
};

/// Regular n_poly-gon inscribed in the speed circle, as half-planes with
/// outward boundary normals at angles 2*pi*k/n_poly and apothem
/// v_max * cos(pi / n_poly). Tags are "speed:<k>".
std::vector<TaggedHalfPlane> speed_polygon(double v_max, int n_poly);

/// Exact Euclidean projection of v_ref onto the intersection of the
/// half-planes. Candidates are v_ref itself, its projection onto each
/// boundary line and all pairwise boundary intersections; feasibility is
/// checked within 1e-7. Returns nullopt when the feasible set is empty.
std::optional<Vec2> solve_projection(const ConstraintSet& constraints, Vec2 v_ref);

/// Moves v_curr toward v_star by at most d_max.
Vec2 limit_acceleration(Vec2 v_curr, Vec2 v_star, double d_max);

/// One planning step: assembles the speed polygon, one COLREGs-selected VO
/// half-plane per active vessel threat and one argmax-side half-plane per
/// active grounding circle, projects the reference velocity, and applies
/// the per-step acceleration limit. Any already-in-conflict cone collapses
/// the outcome to the stop command (feasible = false, v_star = 0).
PlanOutcome plan_step(const VesselState& ego, std::span<const VesselState> targets,
                      const UncertaintyBounds& bounds, std::span<const Disc> grounding,
                      Vec2 goal, const PlannerParams& params, const RiskThresholds& thresholds,
                      const ColregsConfig& colregs = {});

}  // namespace seaplan
