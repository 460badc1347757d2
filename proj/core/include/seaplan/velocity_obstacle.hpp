#pragma once

#include "seaplan/geometry.hpp"

#include <optional>
#include <utility>

namespace seaplan {

/// Radii of the disc-shaped uncertainty sets on the target's estimated
/// position and velocity.
struct UncertaintyBounds {
    double eps_p_m = 50.0;
    double eps_v_mps = 0.5;
};

/// Collision cone in relative-velocity space: apex at the origin, opening
/// half_angle to each side of axis. The axis points from the ego toward
/// the (estimated) target position; sin(half_angle) equals the inflated
/// radius over the separation.
struct CollisionCone {
    Vec2 axis;          // unit
    double half_angle;  // rad, in (0, pi/2)
};

/// Velocity obstacle in absolute velocity space: the cone translated to
/// apex = estimated target velocity, expanded by the eps_v disc, with its
/// two supporting half-planes shifted eps_v outward along their normals.
struct VelocityObstacleRegion {
    Vec2 apex;  // = estimated target velocity, m/s
    CollisionCone cone;
    double eps_v = 0.0;
    HalfPlane left;
    HalfPlane right;
};

/// Cone subtending the target disc inflated by the ego radius and the
/// position-uncertainty radius. Returns nullopt (already in conflict) when
/// the separation does not exceed the inflated radius; the caller must
/// treat the whole velocity space as blocked.
std::optional<CollisionCone> build_collision_cone(Vec2 p_a, Vec2 p_b_hat,
                                                  double r_a, double r_b,
                                                  double eps_p);

/// Tangent half-planes of the cone translated to apex v_b_hat. The right
/// normal is rotate(axis, +(half_angle + pi/2)), the left its mirror, and
/// both anchors sit eps_v outward of the apex along their own normals, so
/// the feasible side of each plane excludes the eps_v-expanded cone.
std::pair<HalfPlane, HalfPlane> supporting_half_planes(const CollisionCone& cone,
                                                       Vec2 v_b_hat, double eps_v);

VelocityObstacleRegion make_velocity_obstacle(const CollisionCone& cone,
                                              Vec2 v_b_hat, double eps_v);

/// Exact membership in the robust VO: true iff the point-to-cone distance
/// of (v_a - apex) is at most eps_v (the Minkowski sum of the cone with
/// the eps_v disc).
bool vo_contains(const VelocityObstacleRegion& vo, Vec2 v_a);

/// Exact Euclidean distance from w to the closed cone
/// { u : angle(u, axis) <= half_angle }.
double cone_distance(const CollisionCone& cone, Vec2 w);

/// Stationary synthetic target standing in for a shallow-water circle.
struct GroundingTarget {
    Vec2 position;
    double radius = 0.0;
    Vec2 velocity;  // always (0,0)
};

/// Maps a shallow-water circle onto a stationary target for the cone
/// pipeline (with eps_v = 0). Returns nullopt when the ego is not strictly
/// outside the circle inflated by ego_radius + eps_p (grounding imminent).
std::optional<GroundingTarget> grounding_obstacle(const Disc& circle, Vec2 ego_pos,
                                                  double ego_radius, double eps_p);

}  // namespace seaplan
