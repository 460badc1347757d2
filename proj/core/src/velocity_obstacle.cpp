#include "seaplan/velocity_obstacle.hpp"

namespace seaplan {

std::optional<CollisionCone> build_collision_cone(Vec2 p_a, Vec2 p_b_hat,
                                                  double r_a, double r_b,
                                                  double eps_p) {
    const Vec2 rel = p_b_hat - p_a;
    const double dist = rel.norm();
    const double inflated = r_a + r_b + eps_p;
    if (dist <= inflated) return std::nullopt;
    return CollisionCone{rel / dist, std::asin(inflated / dist)};
}

std::pair<HalfPlane, HalfPlane> supporting_half_planes(const CollisionCone& cone,
                                                       Vec2 v_b_hat, double eps_v) {
    const Vec2 n_left = rotate(cone.axis, -(cone.half_angle + kPi / 2.0));
    const Vec2 n_right = rotate(cone.axis, +(cone.half_angle + kPi / 2.0));
    const HalfPlane left{n_left, v_b_hat + n_left * eps_v};
    const HalfPlane right{n_right, v_b_hat + n_right * eps_v};
    return {left, right};
}

VelocityObstacleRegion make_velocity_obstacle(const CollisionCone& cone,
                                              Vec2 v_b_hat, double eps_v) {
    auto [left, right] = supporting_half_planes(cone, v_b_hat, eps_v);
    return {v_b_hat, cone, eps_v, left, right};
}

double cone_distance(const CollisionCone& cone, Vec2 w) {
    const double angle = std::abs(std::atan2(cone.axis.cross(w), cone.axis.dot(w)));
    if (angle <= cone.half_angle) return 0.0;
    const double off = angle - cone.half_angle;
    // Past the perpendicular of the nearer boundary ray the apex is closest.
    if (off >= kPi / 2.0) return w.norm();
    return w.norm() * std::sin(off);
}

bool vo_contains(const VelocityObstacleRegion& vo, Vec2 v_a) {
    return cone_distance(vo.cone, v_a - vo.apex) <= vo.eps_v;
}

std::optional<GroundingTarget> grounding_obstacle(const Disc& circle, Vec2 ego_pos,
                                                  double ego_radius, double eps_p) {
    const double inflated = circle.radius + ego_radius + eps_p;
    if (distance(ego_pos, circle.center) <= inflated) return std::nullopt;
    return GroundingTarget{circle.center, circle.radius, Vec2{}};
}

}  // namespace seaplan
