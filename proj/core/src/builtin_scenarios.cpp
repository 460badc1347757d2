#include "seaplan/builtin_scenarios.hpp"

#include "seaplan/circle_cover.hpp"

namespace seaplan {

namespace {

Scenario base_scenario() {
    Scenario scn;
    scn.ego = make_vessel("ego", {0, 0}, 0.0, 10.0, 250.0);
    scn.goal = {7000, 0};
    scn.dt_s = 0.1;
    scn.horizon_s = 1000.0;
    // Scenario regions are modest, so a tighter exterior margin keeps the
    // preprocessing solve quick without touching the selected circles.
    scn.cover_config.margin_m = 400.0;
    return scn;
}

}  // namespace

Scenario make_case_a() {
    Scenario scn = base_scenario();
    scn.name = "case_a";
    scn.seed = 7;
    scn.targets.push_back(make_vessel("V1", {6000, 0}, 180.0, 10.0, 250.0));
    // Port side of the corridor, close enough that the grounding circles
    // enter the risk gate while the vessel passes.
    scn.regions.push_back(generate_region(7, 280.0, 4, 0.4, {500, -900}, 48));
    return scn;
}

Scenario make_case_b() {
    Scenario scn = base_scenario();
    scn.name = "case_b";
    scn.seed = 11;
    scn.targets.push_back(make_vessel("V1", {3500, 2500}, 270.0, 10.0, 250.0));
    scn.targets.push_back(make_vessel("V2", {6000, 0}, 180.0, 10.0, 250.0));
    scn.regions.push_back(generate_region(11, 280.0, 4, 0.4, {500, -900}, 48));
    scn.regions.push_back(generate_region(12, 400.0, 4, 0.4, {5200, -1400}, 48));
    scn.regions.push_back(generate_region(13, 350.0, 4, 0.4, {5600, 2300}, 48));
    return scn;
}

}  // namespace seaplan
