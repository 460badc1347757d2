#include <doctest.h>

#include "seaplan/builtin_scenarios.hpp"
#include "seaplan/scenario_io.hpp"
#include "seaplan/svg_plot.hpp"

using namespace seaplan;

TEST_CASE("format_double: canonical shortest round-trip text") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(1.5) == "1.5");
    CHECK(format_double(10.0) == "10");
    CHECK(format_double(0.1) == "0.1");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("scenario JSON round-trips through the loader") {
    const Scenario scn = make_case_b();
    const std::string text = scenario_to_json(scn);
    const Scenario back = scenario_from_json(text);
    CHECK(back.name == "case_b");
    REQUIRE(back.targets.size() == 2);
    CHECK(back.targets[0].position.n == 3500.0);
    CHECK(back.targets[0].position.e == 2500.0);
    CHECK(back.targets[0].heading_deg == 270.0);
    CHECK(back.targets[1].heading_deg == 180.0);
    CHECK(back.regions.size() == 3);
    CHECK(back.planner.v_max_mps == scn.planner.v_max_mps);
    CHECK(back.risk.dcpa_max_m == scn.risk.dcpa_max_m);
    CHECK(back.cover_config.margin_m.has_value());
    // Velocity re-derived from heading/speed on load.
    CHECK(back.targets[0].velocity.e == doctest::Approx(-10.0));
}

TEST_CASE("scenario loader reports path-qualified schema errors") {
    auto expect_error = [](const std::string& text, const std::string& needle) {
        try {
            scenario_from_json(text);
            FAIL("expected SchemaError for ", needle);
        } catch (const SchemaError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("{}", "ego");
    expect_error(R"({"ego": {"heading_deg": 0, "speed_mps": 1}})", "scenario.ego");
    expect_error(
        R"({"ego": {"start_ne": [0,0], "heading_deg": 0, "speed_mps": 1}})", "goal_ne");
    expect_error(
        R"({"ego": {"start_ne": [0,0], "heading_deg": 0, "speed_mps": 1},
            "goal_ne": [1,0], "targets": [{"start_ne": [1,1], "speed_mps": 2}]})",
        "targets[0]");
    expect_error(
        R"({"ego": {"start_ne": [0,0], "heading_deg": 0, "speed_mps": 1},
            "goal_ne": [1,0], "regions": [[[0,0],[1,1]]]})",
        "regions[0]");
    expect_error("not json", "scenario");
}

TEST_CASE("goal may come from the planner block") {
    const std::string text =
        R"({"ego": {"start_ne": [0,0], "heading_deg": 0, "speed_mps": 1},
            "planner": {"goal_ne": [5000, 100]}})";
    const Scenario scn = scenario_from_json(text);
    CHECK(scn.goal.n == 5000.0);
    CHECK(scn.goal.e == 100.0);
}

TEST_CASE("region and cover documents round-trip") {
    const Polygon region = generate_region(5, 300.0, 4, 0.35, {100, 200}, 32);
    const Polygon back = region_from_json(region_to_json(region));
    REQUIRE(back.vertices.size() == region.vertices.size());
    CHECK(back.vertices[7].n == region.vertices[7].n);

    CircleCover cover;
    cover.region = region;
    cover.circles = {{{100, 200}, 300.0}, {{0, 0}, 100.0}};
    cover.spill_ratio = 0.25;
    cover.solver_report.selected = {3, 9};
    cover.solver_report.total_cost = 21.5;
    cover.solver_report.proven_optimal = true;
    cover.solver_report.feasible = true;
    cover.solver_report.iterations = 77;
    cover.solver_report.solve_time_s = 1.25;

    const CircleCover back_cover = cover_from_json(cover_to_json(cover));
    REQUIRE(back_cover.circles.size() == 2);
    CHECK(back_cover.circles[0].radius == 300.0);
    CHECK(back_cover.spill_ratio == 0.25);
    CHECK(back_cover.solver_report.selected == std::vector<int>{3, 9});
    // Canonical serialization zeroes the wall-clock field.
    CHECK(back_cover.solver_report.solve_time_s == 0.0);
    const CircleCover timed =
        cover_from_json(cover_to_json(cover, /*include_timing=*/true));
    CHECK(timed.solver_report.solve_time_s == 1.25);

    const auto multi = covers_from_json(covers_to_json(std::vector<CircleCover>{cover, cover}));
    CHECK(multi.size() == 2);
}

TEST_CASE("trajectory CSV: pinned column order and round-trip") {
    TrajectoryLog log;
    log.target_ids = {"V1", "V2"};
    StepRecord rec;
    rec.t = 0.1;
    rec.ego_position = {1, 2};
    rec.ego_velocity = {3, 4};
    rec.target_positions = {{10, 20}, {30, 40}};
    rec.feasible = true;
    rec.active_constraints = {"target:V1", "speed:3"};
    rec.qp_time_s = 0.00123;
    log.steps.push_back(rec);

    const std::string csv = trajectory_to_csv(log);
    CHECK(csv.rfind("t,ego_n,ego_e,ego_vn,ego_ve,V1_n,V1_e,V2_n,V2_e,feasible,qp_ms,tags\n",
                    0) == 0);
    CHECK(csv.find("0.1,1,2,3,4,10,20,30,40,1,0,target:V1;speed:3\n") != std::string::npos);

    const std::string timed = trajectory_to_csv(log, /*include_timing=*/true);
    CHECK(timed.find(",1.23,") != std::string::npos);

    const TrajectoryLog back = trajectory_from_csv(csv);
    CHECK(back.target_ids == log.target_ids);
    REQUIRE(back.steps.size() == 1);
    CHECK(back.steps[0].ego_position.n == 1.0);
    CHECK(back.steps[0].target_positions[1].e == 40.0);
    CHECK(back.steps[0].active_constraints == rec.active_constraints);

    CHECK_THROWS_AS(trajectory_from_csv(""), SchemaError);
    CHECK_THROWS_AS(trajectory_from_csv("t,ego_n\n"), SchemaError);
    const std::string header_only(csv.substr(0, csv.find('\n') + 1));
    CHECK_THROWS_AS(trajectory_from_csv(header_only), SchemaError);
}

TEST_CASE("metrics JSON: null sentinels and timing policy") {
    Metrics m;
    m.path_length_m = 6900.0;
    m.goal_reached = false;
    m.qp_time_mean_s = 0.0006;
    m.qp_time_max_s = 0.005;
    const std::string text = metrics_to_json(m);
    CHECK(text.find("\"min_separation_m\": null") != std::string::npos);
    CHECK(text.find("\"goal_time_s\": null") != std::string::npos);
    CHECK(text.find("\"qp_time_mean_ms\": 0.0") != std::string::npos);
    const std::string timed = metrics_to_json(m, /*include_timing=*/true);
    CHECK(timed.find("\"qp_time_max_ms\": 5.0") != std::string::npos);
}

TEST_CASE("render_svg: one trajectory per vessel, optional circles") {
    TrajectoryLog log;
    log.target_ids = {"V1"};
    for (int i = 0; i < 10; ++i) {
        StepRecord rec;
        rec.t = i * 0.1;
        rec.ego_position = {i * 10.0, 0.0};
        rec.target_positions = {{1000.0 - i * 10.0, 50.0}};
        log.steps.push_back(rec);
    }
    const Polygon region{{{200, 200}, {400, 200}, {400, 400}, {200, 400}}};

    const std::string with_cover = render_svg(log, {region}, {{{300, 300}, 120.0}});
    auto count = [](const std::string& hay, const std::string& needle) {
        size_t n = 0;
        for (size_t pos = hay.find(needle); pos != std::string::npos;
             pos = hay.find(needle, pos + needle.size()))
            ++n;
        return n;
    };
    CHECK(count(with_cover, "<polyline class=\"trajectory\"") == 2);
    CHECK(count(with_cover, "<circle") == 1);
    CHECK(count(with_cover, "<polygon class=\"region\"") == 1);

    const std::string bare = render_svg(log, {}, {});
    CHECK(count(bare, "<circle") == 0);
    CHECK(count(bare, "<polyline class=\"trajectory\"") == 2);

    // Deterministic byte output.
    CHECK(render_svg(log, {region}, {}) == render_svg(log, {region}, {}));

    TrajectoryLog empty;
    CHECK_THROWS_AS(render_svg(empty, {}, {}), SchemaError);
}
