#include "seaplan/geometry.hpp"

#include <algorithm>
#include <limits>

namespace seaplan {

double wrap_deg_180(double deg) {
    double x = std::fmod(deg + 180.0, 360.0);
    if (x <= 0.0) x += 360.0;
    return x - 180.0;
}

double bearing_deg(Vec2 from, Vec2 to) {
    const Vec2 d = to - from;
    if (d.norm_sq() == 0.0) return 0.0;
    return wrap_deg_180(rad2deg(std::atan2(d.e, d.n)));
}

double heading_from_velocity(Vec2 v) {
    if (v.norm_sq() < 1e-24) return 0.0;
    double h = rad2deg(std::atan2(v.e, v.n));
    if (h < 0.0) h += 360.0;
    return h;
}

HalfPlane make_half_plane(Vec2 normal, Vec2 anchor) {
    const double m = normal.norm();
    if (m < 1e-12) throw std::invalid_argument("half-plane normal has zero length");
    return {normal / m, anchor};
}

namespace {

double signed_area2(const Polygon& poly) {
    double s = 0.0;
    const auto& v = poly.vertices;
    for (size_t i = 0; i < v.size(); ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % v.size()];
        s += a.n * b.e - b.n * a.e;
    }
    return s;
}

// Distance from p to segment ab.
double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len_sq = ab.norm_sq();
    if (len_sq == 0.0) return distance(p, a);
    const double t = std::clamp((p - a).dot(ab) / len_sq, 0.0, 1.0);
    return distance(p, a + ab * t);
}

int orientation(Vec2 a, Vec2 b, Vec2 c) {
    const double v = (b - a).cross(c - a);
    if (v > 1e-12) return 1;
    if (v < -1e-12) return -1;
    return 0;
}

bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
    return std::min(a.n, b.n) - 1e-12 <= p.n && p.n <= std::max(a.n, b.n) + 1e-12 &&
           std::min(a.e, b.e) - 1e-12 <= p.e && p.e <= std::max(a.e, b.e) + 1e-12;
}

bool segments_intersect(Vec2 p1, Vec2 q1, Vec2 p2, Vec2 q2) {
    const int o1 = orientation(p1, q1, p2);
    const int o2 = orientation(p1, q1, q2);
    const int o3 = orientation(p2, q2, p1);
    const int o4 = orientation(p2, q2, q1);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(p1, q1, p2)) return true;
    if (o2 == 0 && on_segment(p1, q1, q2)) return true;
    if (o3 == 0 && on_segment(p2, q2, p1)) return true;
    if (o4 == 0 && on_segment(p2, q2, q1)) return true;
    return false;
}

}  // namespace

void validate_polygon(const Polygon& poly, const std::string& what) {
    const auto& v = poly.vertices;
    if (v.size() < 3) throw std::invalid_argument(what + ": fewer than 3 vertices");
    if (distance(v.front(), v.back()) < 1e-12)
        throw std::invalid_argument(what + ": first vertex repeated at end");
    if (std::abs(signed_area2(poly)) < 1e-12)
        throw std::invalid_argument(what + ": zero signed area");
}

bool polygon_contains(const Polygon& poly, Vec2 p) {
    const auto& v = poly.vertices;
    const size_t n = v.size();

    // Boundary points count as inside.
    for (size_t i = 0; i < n; ++i) {
        if (point_segment_distance(p, v[i], v[(i + 1) % n]) <= 1e-9) return true;
    }

    // Even-odd ray crossing, ray toward +East.
    bool inside = false;
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = v[i];
        const Vec2& b = v[j];
        const bool straddles = (a.n > p.n) != (b.n > p.n);
        if (straddles) {
            const double e_cross = a.e + (p.n - a.n) / (b.n - a.n) * (b.e - a.e);
            if (p.e < e_cross) inside = !inside;
        }
    }
    return inside;
}

double polygon_area(const Polygon& poly) {
    return std::abs(signed_area2(poly)) * 0.5;
}

bool polygon_is_simple(const Polygon& poly) {
    const auto& v = poly.vertices;
    const size_t n = v.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            // Skip adjacent edges (sharing a vertex), including the wrap pair.
            if (j == i || j == (i + 1) % n || (j + 1) % n == i) continue;
            if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
                return false;
        }
    }
    return true;
}

bool polygon_is_convex(const Polygon& poly) {
    const auto& v = poly.vertices;
    const size_t n = v.size();
    int sign = 0;
    for (size_t i = 0; i < n; ++i) {
        const int o = orientation(v[i], v[(i + 1) % n], v[(i + 2) % n]);
        if (o == 0) continue;
        if (sign == 0) sign = o;
        else if (o != sign) return false;
    }
    return true;
}

BoundingBox bounding_box(const Polygon& poly) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    BoundingBox box{{inf, inf}, {-inf, -inf}};
    for (const Vec2& p : poly.vertices) {
        box.lo.n = std::min(box.lo.n, p.n);
        box.lo.e = std::min(box.lo.e, p.e);
        box.hi.n = std::max(box.hi.n, p.n);
        box.hi.e = std::max(box.hi.e, p.e);
    }
    return box;
}

BoundingBox bounding_box(const std::vector<Disc>& discs) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    BoundingBox box{{inf, inf}, {-inf, -inf}};
    for (const Disc& d : discs) {
        box.lo.n = std::min(box.lo.n, d.center.n - d.radius);
        box.lo.e = std::min(box.lo.e, d.center.e - d.radius);
        box.hi.n = std::max(box.hi.n, d.center.n + d.radius);
        box.hi.e = std::max(box.hi.e, d.center.e + d.radius);
    }
    return box;
}

BoundingBox merge(const BoundingBox& a, const BoundingBox& b) {
    return {{std::min(a.lo.n, b.lo.n), std::min(a.lo.e, b.lo.e)},
            {std::max(a.hi.n, b.hi.n), std::max(a.hi.e, b.hi.e)}};
}

}  // namespace seaplan
