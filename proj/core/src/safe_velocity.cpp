#include "seaplan/safe_velocity.hpp"

#include <chrono>
#include <cmath>
#include <limits>

namespace seaplan {

namespace {
constexpr double kFeasTol = 1e-7;
constexpr double kActiveTol = 1e-6;
}

std::vector<TaggedHalfPlane> speed_polygon(double v_max, int n_poly) {
    // Edge k has outward normal u_k = (cos, sin)(2*pi*k/n) and the feasible
    // side u_k . v <= apothem; in anchor form the plane normal is -u_k.
    const double apothem = v_max * std::cos(kPi / n_poly);
    std::vector<TaggedHalfPlane> planes;
    planes.reserve(n_poly);
    for (int k = 0; k < n_poly; ++k) {
        const double angle = 2.0 * kPi * k / n_poly;
        const Vec2 u{std::cos(angle), std::sin(angle)};
        planes.push_back({HalfPlane{-u, u * apothem}, "speed:" + std::to_string(k)});
    }
    return planes;
}

namespace {

bool feasible_point(const std::vector<TaggedHalfPlane>& hps, Vec2 v, double tol) {
    for (const auto& c : hps) {
        if (c.hp.normal.dot(v - c.hp.anchor) < -tol) return false;
    }
    return true;
}

}  // namespace

std::optional<Vec2> solve_projection(const ConstraintSet& constraints, Vec2 v_ref) {
    const auto& hps = constraints.half_planes;
    if (feasible_point(hps, v_ref, kFeasTol)) return v_ref;

    const size_t m = hps.size();
    bool found = false;
    Vec2 best;
    double best_d2 = std::numeric_limits<double>::infinity();
    auto consider = [&](Vec2 cand) {
        if (!feasible_point(hps, cand, kFeasTol)) return;
        const double d2 = (cand - v_ref).norm_sq();
        if (d2 < best_d2) {
            best_d2 = d2;
            best = cand;
            found = true;
        }
    };

    // Projections of v_ref onto each boundary line.
    for (size_t i = 0; i < m; ++i) {
        const HalfPlane& h = hps[i].hp;
        consider(v_ref - h.normal * h.normal.dot(v_ref - h.anchor));
    }
    // All pairwise boundary intersections.
    for (size_t i = 0; i < m; ++i) {
        const HalfPlane& a = hps[i].hp;
        const double ca = a.normal.dot(a.anchor);
        for (size_t j = i + 1; j < m; ++j) {
            const HalfPlane& b = hps[j].hp;
            const double det = a.normal.cross(b.normal);
            if (std::abs(det) < 1e-12) continue;
            const double cb = b.normal.dot(b.anchor);
            consider(Vec2{(ca * b.normal.e - cb * a.normal.e) / det,
                          (a.normal.n * cb - b.normal.n * ca) / det});
        }
    }

    if (!found) return std::nullopt;
    return best;
}

Vec2 limit_acceleration(Vec2 v_curr, Vec2 v_star, double d_max) {
    const Vec2 delta = v_star - v_curr;
    const double mag = delta.norm();
    if (mag <= d_max) return v_star;
    return v_curr + delta * (d_max / mag);
}

PlanOutcome plan_step(const VesselState& ego, std::span<const VesselState> targets,
                      const UncertaintyBounds& bounds, std::span<const Disc> grounding,
                      Vec2 goal, const PlannerParams& params, const RiskThresholds& thresholds,
                      const ColregsConfig& colregs) {
    PlanOutcome out;
    if (params.v_ref_policy == VRefPolicy::FixedProfile) {
        out.v_ref = params.fixed_profile;
    } else {
        out.v_ref = (goal - ego.position).unit() * params.cruise_mps;
    }

    ConstraintSet constraints;
    constraints.half_planes = speed_polygon(params.v_max_mps, params.n_poly);

    bool in_conflict = false;

    for (const VesselState& tgt : targets) {
        const RelativeKinematics rk =
            relative_kinematics(ego.position, ego.velocity, tgt.position, tgt.velocity);
        if (!is_active_threat(rk, thresholds)) continue;
        const auto cone = build_collision_cone(ego.position, tgt.position, ego.radius_m,
                                               tgt.radius_m, bounds.eps_p_m);
        if (!cone) {
            in_conflict = true;
            break;
        }
        const VelocityObstacleRegion vo =
            make_velocity_obstacle(*cone, tgt.velocity, bounds.eps_v_mps);
        const EncounterKind kind = classify(ego, tgt, colregs);
        const SideSelection sel = select_side(kind, vo, ego.velocity);
        constraints.half_planes.push_back(
            {sel.side == Side::R ? vo.right : vo.left, "target:" + tgt.id});
        out.encounters.push_back({tgt.id, kind, sel.side});
    }

    if (!in_conflict) {
        for (size_t i = 0; i < grounding.size(); ++i) {
            const Disc& circle = grounding[i];
            const RelativeKinematics rk =
                relative_kinematics(ego.position, ego.velocity, circle.center, Vec2{});
            if (!is_active_threat(rk, thresholds)) continue;
            const auto synthetic =
                grounding_obstacle(circle, ego.position, ego.radius_m, bounds.eps_p_m);
            if (!synthetic) {
                in_conflict = true;
                break;
            }
            const auto cone = build_collision_cone(ego.position, synthetic->position,
                                                   ego.radius_m, synthetic->radius,
                                                   bounds.eps_p_m);
            const VelocityObstacleRegion vo =
                make_velocity_obstacle(*cone, synthetic->velocity, 0.0);
            // COLREGs do not apply to terrain: always the argmax branch.
            const SideSelection sel = select_side(EncounterKind::NoRule, vo, ego.velocity);
            constraints.half_planes.push_back(
                {sel.side == Side::R ? vo.right : vo.left, "ground:" + std::to_string(i)});
        }
    }

    const auto t0 = std::chrono::steady_clock::now();
    std::optional<Vec2> v_star;
    if (!in_conflict) v_star = solve_projection(constraints, out.v_ref);
    out.solve_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    out.already_in_conflict = in_conflict;
    out.feasible = v_star.has_value();
    out.v_star = v_star.value_or(Vec2{});
    out.v_next = limit_acceleration(ego.velocity, out.v_star, params.d_max_mps);

    if (out.feasible) {
        for (const auto& c : constraints.half_planes) {
            if (std::abs(c.hp.normal.dot(out.v_star - c.hp.anchor)) <= kActiveTol)
                out.active_constraints.push_back(c.tag);
        }
    }
    return out;
}

}  // namespace seaplan
