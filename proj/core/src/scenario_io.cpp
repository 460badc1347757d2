#include "seaplan/scenario_io.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace seaplan {

using nlohmann::json;

std::string format_double(double v) {
    if (v == 0.0) return "0";  // collapses -0
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

const json& require(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path + ": expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path + ": missing required field '" + key + "'");
    return *it;
}

double as_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw SchemaError(path + ": expected a number");
    return j.get<double>();
}

double number_field(const json& j, const char* key, const std::string& path) {
    return as_number(require(j, key, path), path + "." + key);
}

double number_or(const json& j, const char* key, const std::string& path, double fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    return as_number(j.at(key), path + "." + key);
}

Vec2 as_vec2(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw SchemaError(path + ": expected [north_m, east_m]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json vec2_json(Vec2 v) { return json::array({v.n, v.e}); }

Polygon polygon_from(const json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path + ": expected an array of [n, e] pairs");
    Polygon poly;
    for (size_t i = 0; i < j.size(); ++i)
        poly.vertices.push_back(as_vec2(j[i], path + "[" + std::to_string(i) + "]"));
    try {
        validate_polygon(poly);
    } catch (const std::invalid_argument& e) {
        throw SchemaError(path + ": " + e.what());
    }
    return poly;
}

json polygon_json(const Polygon& poly) {
    json arr = json::array();
    for (const Vec2& v : poly.vertices) arr.push_back(vec2_json(v));
    return arr;
}

VesselState vessel_from(const json& j, const std::string& path, const std::string& default_id) {
    VesselState v;
    v.id = j.contains("id") ? j.at("id").get<std::string>() : default_id;
    v.position = as_vec2(require(j, "start_ne", path), path + ".start_ne");
    v.heading_deg = number_field(j, "heading_deg", path);
    v.speed_mps = number_field(j, "speed_mps", path);
    v.radius_m = number_or(j, "radius_m", path, 250.0);
    if (v.radius_m <= 0) throw SchemaError(path + ".radius_m: must be positive");
    v.velocity = heading_to_velocity(v.heading_deg, v.speed_mps);
    return v;
}

json vessel_json(const VesselState& v) {
    return {{"id", v.id},
            {"start_ne", vec2_json(v.position)},
            {"heading_deg", v.heading_deg},
            {"speed_mps", v.speed_mps},
            {"radius_m", v.radius_m}};
}

json parse_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(what + ": " + e.what());
    }
}

CoverSolution solver_from(const json& j, const std::string& path) {
    CoverSolution sol;
    sol.selected = require(j, "selected", path).get<std::vector<int>>();
    sol.total_cost = number_field(j, "total_cost", path);
    sol.proven_optimal = require(j, "proven_optimal", path).get<bool>();
    sol.feasible = require(j, "feasible", path).get<bool>();
    sol.iterations = require(j, "iterations", path).get<long>();
    sol.solve_time_s = number_or(j, "solve_time_s", path, 0.0);
    return sol;
}

json solver_json(const CoverSolution& sol, bool include_timing) {
    return {{"selected", sol.selected},
            {"total_cost", sol.total_cost},
            {"proven_optimal", sol.proven_optimal},
            {"feasible", sol.feasible},
            {"iterations", sol.iterations},
            {"solve_time_s", include_timing ? sol.solve_time_s : 0.0}};
}

json cover_json_obj(const CircleCover& cover, bool include_timing) {
    json circles = json::array();
    for (const Disc& d : cover.circles)
        circles.push_back({{"center_ne", vec2_json(d.center)}, {"radius_m", d.radius}});
    return {{"region", polygon_json(cover.region)},
            {"circles", circles},
            {"spill_ratio", cover.spill_ratio},
            {"solver", solver_json(cover.solver_report, include_timing)}};
}

CircleCover cover_from_obj(const json& j, const std::string& path) {
    CircleCover cover;
    cover.region = polygon_from(require(j, "region", path), path + ".region");
    const json& circles = require(j, "circles", path);
    if (!circles.is_array()) throw SchemaError(path + ".circles: expected an array");
    for (size_t i = 0; i < circles.size(); ++i) {
        const std::string cpath = path + ".circles[" + std::to_string(i) + "]";
        Disc d;
        d.center = as_vec2(require(circles[i], "center_ne", cpath), cpath + ".center_ne");
        d.radius = number_field(circles[i], "radius_m", cpath);
        if (d.radius <= 0) throw SchemaError(cpath + ".radius_m: must be positive");
        cover.circles.push_back(d);
    }
    cover.spill_ratio = number_or(j, "spill_ratio", path, 0.0);
    if (j.contains("solver")) cover.solver_report = solver_from(j.at("solver"), path + ".solver");
    return cover;
}

}  // namespace

Polygon region_from_json(const std::string& text) {
    const json j = parse_text(text, "region");
    if (j.is_object() && j.contains("region"))
        return polygon_from(j.at("region"), "region.region");
    return polygon_from(j, "region");
}

std::string region_to_json(const Polygon& poly) {
    return polygon_json(poly).dump(2);
}

Scenario scenario_from_json(const std::string& text, const std::string& base_dir) {
    const json j = parse_text(text, "scenario");
    if (!j.is_object()) throw SchemaError("scenario: expected an object");
    Scenario scn;
    scn.name = j.contains("name") ? j.at("name").get<std::string>() : "scenario";
    scn.ego = vessel_from(require(j, "ego", "scenario"), "scenario.ego", "ego");

    if (j.contains("goal_ne")) {
        scn.goal = as_vec2(j.at("goal_ne"), "scenario.goal_ne");
    } else if (j.contains("planner") && j.at("planner").contains("goal_ne")) {
        scn.goal = as_vec2(j.at("planner").at("goal_ne"), "scenario.planner.goal_ne");
    } else {
        throw SchemaError("scenario: missing required field 'goal_ne'");
    }

    if (j.contains("targets")) {
        const json& targets = j.at("targets");
        if (!targets.is_array()) throw SchemaError("scenario.targets: expected an array");
        for (size_t i = 0; i < targets.size(); ++i) {
            const std::string path = "scenario.targets[" + std::to_string(i) + "]";
            scn.targets.push_back(vessel_from(targets[i], path, "V" + std::to_string(i + 1)));
        }
    }

    if (j.contains("regions")) {
        const json& regions = j.at("regions");
        if (!regions.is_array()) throw SchemaError("scenario.regions: expected an array");
        for (size_t i = 0; i < regions.size(); ++i)
            scn.regions.push_back(
                polygon_from(regions[i], "scenario.regions[" + std::to_string(i) + "]"));
    }
    if (j.contains("cover_file")) {
        const std::filesystem::path p = j.at("cover_file").get<std::string>();
        const std::filesystem::path resolved = p.is_absolute() ? p : base_dir / p;
        const auto covers = covers_from_json(read_file(resolved.string()));
        scn.has_precomputed_cover = true;
        for (const auto& cover : covers) {
            scn.regions.push_back(cover.region);
            for (const Disc& d : cover.circles) scn.precomputed_cover.push_back(d);
        }
    }

    scn.dt_s = number_or(j, "dt_s", "scenario", 0.1);
    scn.horizon_s = number_or(j, "horizon_s", "scenario", 1000.0);
    scn.goal_radius_m = number_or(j, "goal_radius_m", "scenario", 100.0);
    scn.seed = j.contains("seed") ? j.at("seed").get<uint64_t>() : 0;

    if (j.contains("planner")) {
        const json& p = j.at("planner");
        scn.planner.v_max_mps = number_or(p, "v_max_mps", "scenario.planner", 12.0);
        scn.planner.n_poly =
            static_cast<int>(number_or(p, "n_poly", "scenario.planner", 16.0));
        scn.planner.d_max_mps = number_or(p, "d_max_mps", "scenario.planner", 0.05);
        scn.planner.cruise_mps = number_or(p, "cruise_mps", "scenario.planner", 10.0);
    }
    if (j.contains("risk")) {
        const json& r = j.at("risk");
        scn.risk.tcpa_max_s = number_or(r, "tcpa_max_s", "scenario.risk", 600.0);
        scn.risk.dcpa_max_m = number_or(r, "dcpa_max_m", "scenario.risk", 1000.0);
    }
    if (j.contains("uncertainty")) {
        const json& u = j.at("uncertainty");
        scn.uncertainty.eps_p_m = number_or(u, "eps_p_m", "scenario.uncertainty", 50.0);
        scn.uncertainty.eps_v_mps = number_or(u, "eps_v_mps", "scenario.uncertainty", 0.5);
    }
    if (j.contains("colregs")) {
        const json& c = j.at("colregs");
        const std::string path = "scenario.colregs";
        scn.colregs.headon_band_deg = number_or(c, "headon_band_deg", path, 5.0);
        scn.colregs.headon_bearing_deg = number_or(c, "headon_bearing_deg", path, 22.5);
        scn.colregs.crossing_min_deg = number_or(c, "crossing_min_deg", path, 5.0);
        scn.colregs.crossing_max_deg = number_or(c, "crossing_max_deg", path, 112.5);
        scn.colregs.overtake_bearing_deg = number_or(c, "overtake_bearing_deg", path, 67.5);
        scn.colregs.overtake_heading_deg = number_or(c, "overtake_heading_deg", path, 22.5);
        scn.colregs.overtaken_bearing_deg = number_or(c, "overtaken_bearing_deg", path, 112.5);
    }
    if (j.contains("cover_config")) {
        const json& c = j.at("cover_config");
        const std::string path = "scenario.cover_config";
        scn.cover_config.fine_res_m = number_or(c, "fine_res_m", path, 25.0);
        scn.cover_config.coarse_res_m = number_or(c, "coarse_res_m", path, 100.0);
        if (c.contains("radii_m"))
            scn.cover_config.radii_m = c.at("radii_m").get<std::vector<double>>();
        scn.cover_config.alpha = number_or(c, "alpha", path, 10.0);
        scn.cover_config.beta = number_or(c, "beta", path, 0.1);
        if (c.contains("margin_m"))
            scn.cover_config.margin_m = as_number(c.at("margin_m"), path + ".margin_m");
        try {
            validate_cover_config(scn.cover_config);
        } catch (const std::invalid_argument& e) {
            throw SchemaError(path + ": " + e.what());
        }
    }
    try {
        validate_scenario(scn);
    } catch (const ScenarioInvalid& e) {
        throw SchemaError(e.what());
    }
    return scn;
}

std::string scenario_to_json(const Scenario& scn) {
    json j;
    j["name"] = scn.name;
    j["ego"] = vessel_json(scn.ego);
    j["goal_ne"] = vec2_json(scn.goal);
    j["targets"] = json::array();
    for (const auto& t : scn.targets) j["targets"].push_back(vessel_json(t));
    j["regions"] = json::array();
    for (const auto& r : scn.regions) j["regions"].push_back(polygon_json(r));
    j["dt_s"] = scn.dt_s;
    j["horizon_s"] = scn.horizon_s;
    j["goal_radius_m"] = scn.goal_radius_m;
    j["seed"] = scn.seed;
    j["planner"] = {{"v_max_mps", scn.planner.v_max_mps},
                    {"n_poly", scn.planner.n_poly},
                    {"d_max_mps", scn.planner.d_max_mps},
                    {"cruise_mps", scn.planner.cruise_mps}};
    j["risk"] = {{"tcpa_max_s", scn.risk.tcpa_max_s}, {"dcpa_max_m", scn.risk.dcpa_max_m}};
    j["uncertainty"] = {{"eps_p_m", scn.uncertainty.eps_p_m},
                        {"eps_v_mps", scn.uncertainty.eps_v_mps}};
    j["colregs"] = {{"headon_band_deg", scn.colregs.headon_band_deg},
                    {"headon_bearing_deg", scn.colregs.headon_bearing_deg},
                    {"crossing_min_deg", scn.colregs.crossing_min_deg},
                    {"crossing_max_deg", scn.colregs.crossing_max_deg},
                    {"overtake_bearing_deg", scn.colregs.overtake_bearing_deg},
                    {"overtake_heading_deg", scn.colregs.overtake_heading_deg},
                    {"overtaken_bearing_deg", scn.colregs.overtaken_bearing_deg}};
    json cc = {{"fine_res_m", scn.cover_config.fine_res_m},
               {"coarse_res_m", scn.cover_config.coarse_res_m},
               {"radii_m", scn.cover_config.radii_m},
               {"alpha", scn.cover_config.alpha},
               {"beta", scn.cover_config.beta}};
    if (scn.cover_config.margin_m) cc["margin_m"] = *scn.cover_config.margin_m;
    j["cover_config"] = cc;
    return j.dump(2);
}

std::string cover_to_json(const CircleCover& cover, bool include_timing) {
    return cover_json_obj(cover, include_timing).dump(2);
}

CircleCover cover_from_json(const std::string& text) {
    return cover_from_obj(parse_text(text, "cover"), "cover");
}

std::string covers_to_json(std::span<const CircleCover> covers, bool include_timing) {
    json j;
    j["regions"] = json::array();
    for (const auto& cover : covers) j["regions"].push_back(cover_json_obj(cover, include_timing));
    return j.dump(2);
}

std::vector<CircleCover> covers_from_json(const std::string& text) {
    const json j = parse_text(text, "cover");
    std::vector<CircleCover> covers;
    if (j.is_object() && j.contains("regions")) {
        const json& regions = j.at("regions");
        if (!regions.is_array()) throw SchemaError("cover.regions: expected an array");
        for (size_t i = 0; i < regions.size(); ++i)
            covers.push_back(
                cover_from_obj(regions[i], "cover.regions[" + std::to_string(i) + "]"));
    } else {
        covers.push_back(cover_from_obj(j, "cover"));
    }
    return covers;
}

std::string trajectory_to_csv(const TrajectoryLog& log, bool include_timing) {
    std::string out = "t,ego_n,ego_e,ego_vn,ego_ve";
    for (const auto& id : log.target_ids) out += "," + id + "_n," + id + "_e";
    out += ",feasible,qp_ms,tags\n";
    for (const StepRecord& rec : log.steps) {
        out += format_double(rec.t);
        out += ',' + format_double(rec.ego_position.n) + ',' + format_double(rec.ego_position.e);
        out += ',' + format_double(rec.ego_velocity.n) + ',' + format_double(rec.ego_velocity.e);
        for (const Vec2& p : rec.target_positions)
            out += ',' + format_double(p.n) + ',' + format_double(p.e);
        out += rec.feasible ? ",1" : ",0";
        out += ',' + (include_timing ? format_double(rec.qp_time_s * 1000.0) : std::string("0"));
        out += ',';
        for (size_t i = 0; i < rec.active_constraints.size(); ++i) {
            if (i) out += ';';
            out += rec.active_constraints[i];
        }
        out += '\n';
    }
    return out;
}

TrajectoryLog trajectory_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw SchemaError("trajectory: empty file");

    std::vector<std::string> header;
    {
        std::istringstream hs(line);
        std::string col;
        while (std::getline(hs, col, ',')) header.push_back(col);
    }
    if (header.size() < 8 || header[0] != "t" || header[1] != "ego_n" ||
        header[header.size() - 3] != "feasible")
        throw SchemaError("trajectory: unexpected header layout");
    const size_t n_targets = (header.size() - 8) / 2;

    TrajectoryLog log;
    for (size_t i = 0; i < n_targets; ++i) {
        const std::string& col = header[5 + 2 * i];
        if (col.size() < 2 || col.substr(col.size() - 2) != "_n")
            throw SchemaError("trajectory: malformed target column '" + col + "'");
        log.target_ids.push_back(col.substr(0, col.size() - 2));
    }

    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        while (cells.size() < header.size()) cells.push_back("");  // trailing empty tags
        if (cells.size() != header.size())
            throw SchemaError("trajectory: line " + std::to_string(line_no) +
                              " has wrong column count");
        auto num = [&](size_t i) {
            try {
                return std::stod(cells[i]);
            } catch (...) {
                throw SchemaError("trajectory: line " + std::to_string(line_no) +
                                  " column '" + header[i] + "' is not a number");
            }
        };
        StepRecord rec;
        rec.t = num(0);
        rec.ego_position = {num(1), num(2)};
        rec.ego_velocity = {num(3), num(4)};
        for (size_t i = 0; i < n_targets; ++i)
            rec.target_positions.push_back({num(5 + 2 * i), num(6 + 2 * i)});
        rec.feasible = cells[header.size() - 3] == "1";
        rec.qp_time_s = num(header.size() - 2) / 1000.0;
        const std::string& tags = cells[header.size() - 1];
        if (!tags.empty()) {
            std::istringstream ts(tags);
            std::string tag;
            while (std::getline(ts, tag, ';')) rec.active_constraints.push_back(tag);
        }
        log.steps.push_back(std::move(rec));
    }
    if (log.steps.empty()) throw SchemaError("trajectory: no data rows");
    return log;
}

std::string metrics_to_json(const Metrics& metrics, bool include_timing) {
    json j;
    if (std::isfinite(metrics.min_separation_m))
        j["min_separation_m"] = metrics.min_separation_m;
    else
        j["min_separation_m"] = nullptr;
    j["path_length_m"] = metrics.path_length_m;
    j["goal_reached"] = metrics.goal_reached;
    if (metrics.goal_time_s >= 0)
        j["goal_time_s"] = metrics.goal_time_s;
    else
        j["goal_time_s"] = nullptr;
    j["qp_time_mean_ms"] = include_timing ? metrics.qp_time_mean_s * 1000.0 : 0.0;
    j["qp_time_max_ms"] = include_timing ? metrics.qp_time_max_s * 1000.0 : 0.0;
    j["grounding_violations"] = metrics.grounding_violations;
    j["colregs_events"] = json::array();
    for (const auto& ev : metrics.colregs_events) {
        j["colregs_events"].push_back({{"t_s", ev.t},
                                       {"target", ev.target},
                                       {"kind", to_string(ev.kind)},
                                       {"side", to_string(ev.side)}});
    }
    return j.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SchemaError("cannot write file: " + path);
    out << content;
}

}  // namespace seaplan
