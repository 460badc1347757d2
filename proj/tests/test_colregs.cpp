#include <doctest.h>

#include "seaplan/colregs.hpp"
#include "seaplan/safe_velocity.hpp"
#include "test_util.hpp"

using namespace seaplan;
using seaplan::test::uniform;

namespace {

VesselState vessel(Vec2 pos, double heading, double speed) {
    return make_vessel("x", pos, heading, speed, 250.0);
}

}  // namespace

TEST_CASE("classify: the bundled encounter geometries") {
    const VesselState ego = vessel({0, 0}, 0.0, 10.0);
    CHECK(classify(ego, vessel({6000, 0}, 180.0, 10.0)) == EncounterKind::HeadOn);
    CHECK(classify(ego, vessel({3500, 2500}, 270.0, 10.0)) == EncounterKind::CrossingGiveWay);
    CHECK(classify(ego, vessel({2000, 0}, 0.0, 5.0)) == EncounterKind::Overtaking);
}

TEST_CASE("classify: stand-on, overtaken, no-rule") {
    const VesselState ego = vessel({0, 0}, 0.0, 10.0);
    // Mirror of the give-way case: target on the port bow crossing.
    CHECK(classify(ego, vessel({3500, -2500}, 90.0, 10.0)) == EncounterKind::CrossingStandOn);
    // Faster vessel closing from astern.
    CHECK(classify(ego, vessel({-2000, 0}, 0.0, 15.0)) == EncounterKind::Overtaken);
    // Dead ahead, same course, faster than the ego: no rule fires.
    CHECK(classify(ego, vessel({2000, 0}, 0.0, 15.0)) == EncounterKind::NoRule);
    // Within the head-on bearing band but headings not reciprocal.
    CHECK(classify(ego, vessel({6000, 100}, 150.0, 10.0)) == EncounterKind::NoRule);
}

TEST_CASE("classify: the +/-5 degree head-on band") {
    const VesselState ego = vessel({0, 0}, 0.0, 10.0);
    CHECK(classify(ego, vessel({6000, 0}, 176.0, 10.0)) == EncounterKind::HeadOn);
    CHECK(classify(ego, vessel({6000, 0}, 184.0, 10.0)) == EncounterKind::HeadOn);
    CHECK(classify(ego, vessel({6000, 0}, 174.0, 10.0)) != EncounterKind::HeadOn);
    CHECK(classify(ego, vessel({6000, 0}, 186.0, 10.0)) != EncounterKind::HeadOn);
}

TEST_CASE("classification mirror symmetry across the North axis") {
    std::mt19937_64 rng(31);
    auto mirror = [](const VesselState& v) {
        return make_vessel(v.id, {v.position.n, -v.position.e},
                           wrap_deg_180(-v.heading_deg), v.speed_mps, v.radius_m);
    };
    auto expected = [](EncounterKind k) {
        switch (k) {
            case EncounterKind::CrossingGiveWay: return EncounterKind::CrossingStandOn;
            case EncounterKind::CrossingStandOn: return EncounterKind::CrossingGiveWay;
            default: return k;
        }
    };
    for (int i = 0; i < 3000; ++i) {
        const VesselState ego = vessel({uniform(rng, -500, 500), uniform(rng, -500, 500)},
                                       uniform(rng, 0, 360), uniform(rng, 2, 14));
        const VesselState tgt =
            vessel({ego.position.n + uniform(rng, -6000, 6000),
                    ego.position.e + uniform(rng, -6000, 6000)},
                   uniform(rng, 0, 360), uniform(rng, 2, 14));
        if (distance(ego.position, tgt.position) < 10) continue;
        CHECK(classify(mirror(ego), mirror(tgt)) == expected(classify(ego, tgt)));
    }
}

TEST_CASE("select_side: rule-forced starboard and argmax fallback") {
    const CollisionCone cone{{1, 0}, deg2rad(30.0)};
    const VelocityObstacleRegion vo = make_velocity_obstacle(cone, {-10, 0}, 0.0);

    for (EncounterKind kind : {EncounterKind::HeadOn, EncounterKind::CrossingGiveWay,
                               EncounterKind::Overtaking}) {
        CHECK(select_side(kind, vo, {10, -5}).side == Side::R);
    }

    // margin_R = (-0.5, 0.866).(20, 1) = -9.134, margin_L = -10.866.
    CHECK(select_side(EncounterKind::NoRule, vo, {10, 1}).side == Side::R);
    CHECK(select_side(EncounterKind::NoRule, vo, {10, -1}).side == Side::L);
    // Exact tie breaks toward starboard.
    CHECK(select_side(EncounterKind::NoRule, vo, {10, 0}).side == Side::R);
}

TEST_CASE("argmax side selection is scale invariant") {
    const CollisionCone cone{{1, 0}, deg2rad(30.0)};
    const VelocityObstacleRegion vo = make_velocity_obstacle(cone, {-10, 0}, 0.0);
    std::mt19937_64 rng(32);
    for (int i = 0; i < 1000; ++i) {
        const Vec2 v{uniform(rng, -15, 15), uniform(rng, -15, 15)};
        const double k = uniform(rng, 0.1, 10.0);
        const Vec2 scaled = vo.apex + (v - vo.apex) * k;
        CHECK(select_side(EncounterKind::NoRule, vo, v).side ==
              select_side(EncounterKind::NoRule, vo, scaled).side);
    }
}

TEST_CASE("starboard selection admits only eastward deviations head-on") {
    // Canonical head-on at activation range: target 6000 m ahead, combined
    // inflated radius 550 m, target velocity (-10, 0).
    const auto cone = build_collision_cone({0, 0}, {6000, 0}, 250, 250, 50);
    REQUIRE(cone.has_value());
    const VelocityObstacleRegion vo = make_velocity_obstacle(*cone, {-10, 0}, 0.5);
    const auto sel = select_side(EncounterKind::HeadOn, vo, {10, 0});
    CHECK(sel.side == Side::R);

    const auto polygon = speed_polygon(12.0, 16);
    double min_east = 1e9;
    for (double vn = -12.0; vn <= 12.0; vn += 0.25) {
        for (double ve = -12.0; ve <= 12.0; ve += 0.25) {
            const Vec2 v{vn, ve};
            bool in_polygon = true;
            for (const auto& hp : polygon)
                in_polygon = in_polygon && half_plane_contains(hp.hp, v);
            if (!in_polygon) continue;
            if (half_plane_contains(vo.right, v)) min_east = std::min(min_east, ve);
        }
    }
    CHECK(min_east < 1e9);
    CHECK(min_east >= 0.0);  // every admissible velocity deviates starboard
}
