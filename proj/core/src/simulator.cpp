#include "seaplan/simulator.hpp"

#include <algorithm>
#include <cmath>

namespace seaplan {

void validate_scenario(const Scenario& scn) {
    if (scn.dt_s <= 0) throw ScenarioInvalid("scenario: dt_s <= 0");
    if (scn.horizon_s <= 0) throw ScenarioInvalid("scenario: horizon_s <= 0");
    const double steps = scn.horizon_s / scn.dt_s;
    if (std::abs(steps - std::round(steps)) > 1e-6)
        throw ScenarioInvalid("scenario: horizon_s must be an integer multiple of dt_s");
    if (scn.planner.v_max_mps <= 0) throw ScenarioInvalid("scenario: planner.v_max_mps <= 0");
    if (scn.planner.n_poly < 8) throw ScenarioInvalid("scenario: planner.n_poly < 8");
    if (scn.planner.d_max_mps <= 0 || scn.planner.d_max_mps > scn.planner.v_max_mps)
        throw ScenarioInvalid("scenario: planner.d_max_mps outside (0, v_max]");
    if (scn.risk.tcpa_max_s <= 0 || scn.risk.dcpa_max_m <= 0)
        throw ScenarioInvalid("scenario: risk thresholds must be positive");
    if (scn.uncertainty.eps_p_m < 0 || scn.uncertainty.eps_v_mps < 0)
        throw ScenarioInvalid("scenario: negative uncertainty bounds");
    if (scn.ego.radius_m <= 0) throw ScenarioInvalid("scenario: ego.radius_m <= 0");
    for (const auto& t : scn.targets)
        if (t.radius_m <= 0) throw ScenarioInvalid("scenario: target radius_m <= 0");
    for (const auto& r : scn.regions) validate_polygon(r, "scenario region");
}

VesselState advance(const VesselState& state, double dt) {
    VesselState next = state;
    next.position += state.velocity * dt;
    return next;
}

RunResult run(const Scenario& scn) {
    validate_scenario(scn);

    RunResult result;
    if (scn.has_precomputed_cover) {
        result.cover_circles = scn.precomputed_cover;
    } else {
        for (const Polygon& region : scn.regions) {
            // No time limit: the preprocessing solve must be deterministic.
            result.covers.push_back(convexify(region, scn.cover_config, 0.0));
            for (const Disc& d : result.covers.back().circles)
                result.cover_circles.push_back(d);
        }
    }

    const long n_steps = std::lround(scn.horizon_s / scn.dt_s);
    VesselState ego = scn.ego;
    std::vector<VesselState> targets = scn.targets;

    TrajectoryLog& log = result.log;
    for (const auto& t : targets) log.target_ids.push_back(t.id);
    Metrics& metrics = result.metrics;

    // Last logged (kind, side) per target; events record changes.
    std::vector<std::pair<EncounterKind, Side>> last_logged(
        targets.size(), {EncounterKind::NoRule, Side::R});
    std::vector<bool> has_logged(targets.size(), false);

    double qp_sum = 0.0;
    long qp_count = 0;

    for (long step = 0; step <= n_steps; ++step) {
        const double t = step * scn.dt_s;
        if (distance(ego.position, scn.goal) <= scn.goal_radius_m) {
            metrics.goal_reached = true;
            metrics.goal_time_s = t;
            break;
        }
        if (step == n_steps) break;  // horizon reached without planning again

        const PlanOutcome plan =
            plan_step(ego, targets, scn.uncertainty, result.cover_circles, scn.goal,
                      scn.planner, scn.risk, scn.colregs);

        if (step == 0 && plan.already_in_conflict)
            throw ScenarioInvalid("scenario: already in conflict at t=0");

        StepRecord rec;
        rec.t = t;
        rec.ego_position = ego.position;
        rec.ego_velocity = ego.velocity;
        for (const auto& tgt : targets) rec.target_positions.push_back(tgt.position);
        rec.v_ref = plan.v_ref;
        rec.v_star = plan.v_star;
        rec.v_next = plan.v_next;
        rec.feasible = plan.feasible;
        rec.active_constraints = plan.active_constraints;
        rec.qp_time_s = plan.solve_time_s;
        log.steps.push_back(std::move(rec));

        qp_sum += plan.solve_time_s;
        metrics.qp_time_max_s = std::max(metrics.qp_time_max_s, plan.solve_time_s);
        ++qp_count;

        for (const auto& enc : plan.encounters) {
            for (size_t i = 0; i < targets.size(); ++i) {
                if (targets[i].id != enc.target_id) continue;
                if (!has_logged[i] || last_logged[i] != std::make_pair(enc.kind, enc.side)) {
                    metrics.colregs_events.push_back({t, enc.target_id, enc.kind, enc.side});
                    last_logged[i] = {enc.kind, enc.side};
                    has_logged[i] = true;
                }
                break;
            }
        }

        for (const auto& tgt : targets)
            metrics.min_separation_m =
                std::min(metrics.min_separation_m, distance(ego.position, tgt.position));
        for (const Polygon& region : scn.regions)
            if (polygon_contains(region, ego.position)) {
                ++metrics.grounding_violations;
                break;
            }

        const Vec2 prev = ego.position;
        set_velocity(ego, plan.v_next);
        ego = advance(ego, scn.dt_s);
        metrics.path_length_m += distance(prev, ego.position);
        for (auto& tgt : targets) tgt = advance(tgt, scn.dt_s);
    }

    metrics.qp_time_mean_s = qp_count > 0 ? qp_sum / static_cast<double>(qp_count) : 0.0;
    return result;
}

bool check_collision_free(const TrajectoryLog& log,
                          const std::function<double(size_t)>& combined_radius,
                          std::span<const Polygon> regions) {
    for (const StepRecord& rec : log.steps) {
        for (size_t i = 0; i < rec.target_positions.size(); ++i) {
            if (distance(rec.ego_position, rec.target_positions[i]) <= combined_radius(i))
                return false;
        }
        for (const Polygon& region : regions)
            if (polygon_contains(region, rec.ego_position)) return false;
    }
    return true;
}

}  // namespace seaplan
