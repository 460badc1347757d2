#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace seaplan {

/// Planar vector in a fixed North-East frame. The same type carries
/// positions (m) and velocities (m/s): n is the North component, e the
/// East component. Headings are compass angles, degrees clockwise from
/// North, so a positive rotation turns North toward East (starboard).
struct Vec2 {
    double n = 0.0;
    double e = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double n_, double e_) : n(n_), e(e_) {}

    constexpr Vec2 operator+(Vec2 r) const { return {n + r.n, e + r.e}; }
    constexpr Vec2 operator-(Vec2 r) const { return {n - r.n, e - r.e}; }
    constexpr Vec2 operator-() const { return {-n, -e}; }
    constexpr Vec2 operator*(double s) const { return {n * s, e * s}; }
    constexpr Vec2 operator/(double s) const { return {n / s, e / s}; }
    friend constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

    Vec2& operator+=(Vec2 r) { n += r.n; e += r.e; return *this; }
    Vec2& operator-=(Vec2 r) { n -= r.n; e -= r.e; return *this; }

    constexpr double dot(Vec2 r) const { return n * r.n + e * r.e; }
    /// z-component of the 3D cross product; positive when r lies East of this.
    constexpr double cross(Vec2 r) const { return n * r.e - e * r.n; }
    constexpr double norm_sq() const { return n * n + e * e; }
    double norm() const { return std::hypot(n, e); }

    /// Unit vector; returns (0,0) when the norm is below eps.
    Vec2 unit(double eps = 1e-12) const {
        const double m = norm();
        return m <= eps ? Vec2{} : Vec2{n / m, e / m};
    }

    constexpr bool operator==(const Vec2&) const = default;
};

inline double distance(Vec2 a, Vec2 b) { return (b - a).norm(); }

/// Rotate v by theta radians; positive theta maps (1,0) toward (0,1).
inline Vec2 rotate(Vec2 v, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {v.n * c - v.e * s, v.n * s + v.e * c};
}

constexpr double kPi = 3.14159265358979323846;

constexpr double deg2rad(double d) { return d * kPi / 180.0; }
constexpr double rad2deg(double r) { return r * 180.0 / kPi; }

/// Wrap an angle in degrees to (-180, 180].
double wrap_deg_180(double deg);

/// Compass bearing (degrees clockwise from North, in (-180, 180]) of `to`
/// as seen from `from`.
double bearing_deg(Vec2 from, Vec2 to);

/// Velocity vector for a compass heading (degrees clockwise from North).
inline Vec2 heading_to_velocity(double heading_deg, double speed) {
    const double h = deg2rad(heading_deg);
    return {speed * std::cos(h), speed * std::sin(h)};
}

/// Compass heading of a velocity vector, in [0, 360). Zero-speed vectors
/// report heading 0.
double heading_from_velocity(Vec2 v);

struct Disc {
    Vec2 center;
    double radius = 0.0;  // m, > 0
};

/// Linear constraint { v : normal . (v - anchor) >= 0 }. The boundary is
/// feasible. Normals are kept unit-length by construction.
struct HalfPlane {
    Vec2 normal;  // unit
    Vec2 anchor;
};

/// Builds a half-plane, normalizing `normal`. Throws on a near-zero normal.
HalfPlane make_half_plane(Vec2 normal, Vec2 anchor);

/// Membership with the boundary counted feasible (tolerance 1e-9 absolute).
inline bool half_plane_contains(const HalfPlane& h, Vec2 p) {
    return h.normal.dot(p - h.anchor) >= -1e-9;
}

/// Signed offset of p from the boundary; >= 0 on the feasible side.
inline double half_plane_margin(const HalfPlane& h, Vec2 p) {
    return h.normal.dot(p - h.anchor);
}

/// Closed simple polygon; vertices ordered, first vertex not repeated.
struct Polygon {
    std::vector<Vec2> vertices;
};

/// Throws std::invalid_argument unless the polygon has >= 3 vertices,
/// no repeated closing vertex, and nonzero signed area.
void validate_polygon(const Polygon& poly, const std::string& what = "polygon");

/// Even-odd membership; points on the boundary count as inside.
bool polygon_contains(const Polygon& poly, Vec2 p);

/// Absolute shoelace area, m^2.
double polygon_area(const Polygon& poly);

/// True when no two non-adjacent edges intersect.
bool polygon_is_simple(const Polygon& poly);

bool polygon_is_convex(const Polygon& poly);

struct BoundingBox {
    Vec2 lo;  // min North, min East
    Vec2 hi;  // max North, max East
};

BoundingBox bounding_box(const Polygon& poly);
BoundingBox bounding_box(const std::vector<Disc>& discs);
BoundingBox merge(const BoundingBox& a, const BoundingBox& b);

}  // namespace seaplan
