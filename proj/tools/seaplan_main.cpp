#include "seaplan/builtin_scenarios.hpp"
#include "seaplan/circle_cover.hpp"
#include "seaplan/scenario_io.hpp"
#include "seaplan/simulator.hpp"
#include "seaplan/svg_plot.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace fs = std::filesystem;
using namespace seaplan;

namespace {

// Exit codes shared with CI: 0 ok, 1 I/O or schema error, 2 uncoverable
// region, 3 time limit hit (incumbent written), 4 safety audit failed.
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUncoverable = 2;
constexpr int kExitTimeLimit = 3;
constexpr int kExitUnsafe = 4;

int run_convexify(const std::string& region_path, const std::string& config_path,
                  const std::string& out_path, double time_limit) {
    const Polygon region = region_from_json(read_file(region_path));
    CoverConfig cfg;
    if (!config_path.empty()) {
        // Config files reuse the scenario "cover_config" field names.
        const auto text = read_file(config_path);
        Scenario probe;
        try {
            const std::string wrapped =
                "{\"ego\":{\"start_ne\":[0,0],\"heading_deg\":0,\"speed_mps\":1},"
                "\"goal_ne\":[1,0],\"cover_config\":" + text + "}";
            probe = scenario_from_json(wrapped);
        } catch (const SchemaError& e) {
            throw SchemaError(std::string("cover config: ") + e.what());
        }
        cfg = probe.cover_config;
    }
    const CircleCover cover = convexify(region, cfg, time_limit);
    write_file(out_path, cover_to_json(cover));

    const auto& rep = cover.solver_report;
    std::cout << "circles=" << cover.circles.size() << " cost=" << rep.total_cost
              << " spill_ratio=" << cover.spill_ratio << " time_s=" << rep.solve_time_s
              << " proven_optimal=" << (rep.proven_optimal ? "true" : "false") << "\n";
    return rep.proven_optimal ? kExitOk : kExitTimeLimit;
}

int run_simulate(const std::string& scenario_path, const std::string& out_dir,
                 bool timing) {
    const Scenario scn =
        scenario_from_json(read_file(scenario_path), fs::path(scenario_path).parent_path().string());
    const RunResult result = run(scn);

    fs::create_directories(out_dir);
    write_file((fs::path(out_dir) / "trajectory.csv").string(),
               trajectory_to_csv(result.log, timing));
    write_file((fs::path(out_dir) / "metrics.json").string(),
               metrics_to_json(result.metrics, timing));
    if (!result.covers.empty())
        write_file((fs::path(out_dir) / "cover.json").string(),
                   covers_to_json(result.covers, timing));

    std::vector<double> combined;
    for (const auto& t : scn.targets) combined.push_back(scn.ego.radius_m + t.radius_m);
    const bool safe = check_collision_free(
        result.log, [&](size_t i) { return combined[i]; }, scn.regions);

    const Metrics& mx = result.metrics;
    std::cout << scn.name << ": goal_reached=" << (mx.goal_reached ? "true" : "false")
              << " min_separation_m=" << mx.min_separation_m
              << " path_length_m=" << mx.path_length_m
              << " grounding_violations=" << mx.grounding_violations
              << " qp_mean_ms=" << mx.qp_time_mean_s * 1e3
              << " qp_max_ms=" << mx.qp_time_max_s * 1e3
              << " collision_free=" << (safe ? "true" : "false") << "\n";
    return safe ? kExitOk : kExitUnsafe;
}

int run_plot(const std::string& log_path, const std::string& cover_path,
             const std::string& out_path) {
    const TrajectoryLog log = trajectory_from_csv(read_file(log_path));
    std::vector<Polygon> regions;
    std::vector<Disc> circles;
    if (!cover_path.empty()) {
        for (const CircleCover& cover : covers_from_json(read_file(cover_path))) {
            regions.push_back(cover.region);
            for (const Disc& d : cover.circles) circles.push_back(d);
        }
    }
    write_file(out_path, render_svg(log, regions, circles));
    std::cout << "wrote " << out_path << "\n";
    return kExitOk;
}

int run_scenarios(const std::string& dir) {
    fs::create_directories(dir);
    for (const Scenario& scn : {make_case_a(), make_case_b()}) {
        const auto path = fs::path(dir) / (scn.name + ".json");
        write_file(path.string(), scenario_to_json(scn));
        std::cout << "wrote " << path.string() << "\n";
    }
    return kExitOk;
}

int run_report(const std::vector<std::string>& metric_files) {
    std::cout << "scenario                goal  min_sep_m  path_m    ground  events\n";
    for (const std::string& path : metric_files) {
        const auto j = read_file(path);
        // Minimal pull of the headline numbers; full schema lives in metrics_to_json.
        auto find_num = [&](const std::string& key) -> std::string {
            const auto pos = j.find("\"" + key + "\"");
            if (pos == std::string::npos) throw SchemaError(path + ": missing " + key);
            const auto colon = j.find(':', pos);
            auto end = j.find_first_of(",\n}", colon);
            std::string v = j.substr(colon + 1, end - colon - 1);
            v.erase(0, v.find_first_not_of(" \t"));
            return v;
        };
        std::string name = fs::path(path).parent_path().filename().string();
        if (name.empty()) name = path;
        name.resize(22, ' ');
        std::string events = find_num("colregs_events") == "[]" ? "0" : "1+";
        std::cout << name << "  " << find_num("goal_reached") << "  "
                  << find_num("min_separation_m") << "  " << find_num("path_length_m")
                  << "  " << find_num("grounding_violations") << "  " << events << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Motion planning and scenario simulation for autonomous surface vessels"};
    app.require_subcommand(1);

    std::string region_path, config_path, out_path, scenario_path, out_dir;
    std::string log_path, cover_path, emit_dir;
    std::vector<std::string> metric_files;
    double time_limit = 0.0;
    bool timing = false;

    auto* convexify_cmd =
        app.add_subcommand("convexify", "Approximate a shallow region by optimal circles");
    convexify_cmd->add_option("--region", region_path, "Region polygon JSON")
        ->required()
        ->envname("SEAPLAN_REGION");
    convexify_cmd->add_option("--config", config_path, "Cover config JSON")
        ->envname("SEAPLAN_CONFIG");
    convexify_cmd->add_option("--out", out_path, "Output cover JSON")
        ->required()
        ->envname("SEAPLAN_OUT");
    convexify_cmd->add_option("--time-limit", time_limit, "Solver time limit, seconds")
        ->envname("SEAPLAN_TIME_LIMIT");

    auto* simulate_cmd = app.add_subcommand("simulate", "Run a scenario and write logs");
    simulate_cmd->add_option("--scenario", scenario_path, "Scenario JSON")
        ->required()
        ->envname("SEAPLAN_SCENARIO");
    simulate_cmd->add_option("--out-dir", out_dir, "Output directory")
        ->required()
        ->envname("SEAPLAN_OUT_DIR");
    simulate_cmd
        ->add_flag("--timing", timing,
                   "Write measured solver times into outputs (non-reproducible)")
        ->envname("SEAPLAN_TIMING");

    auto* plot_cmd = app.add_subcommand("plot", "Render a trajectory log to SVG");
    plot_cmd->add_option("--log", log_path, "trajectory.csv")
        ->required()
        ->envname("SEAPLAN_LOG");
    plot_cmd->add_option("--cover", cover_path, "Cover JSON with regions/circles")
        ->envname("SEAPLAN_COVER");
    plot_cmd->add_option("--out", out_path, "Output SVG")
        ->required()
        ->envname("SEAPLAN_OUT");

    auto* scenarios_cmd =
        app.add_subcommand("scenarios", "Emit the bundled benchmark scenarios");
    scenarios_cmd->add_option("--emit", emit_dir, "Output directory")
        ->required()
        ->envname("SEAPLAN_EMIT");

    auto* report_cmd = app.add_subcommand("report", "Summarize metrics.json files");
    report_cmd->add_option("files", metric_files, "metrics.json paths")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (convexify_cmd->parsed())
            return run_convexify(region_path, config_path, out_path, time_limit);
        if (simulate_cmd->parsed()) return run_simulate(scenario_path, out_dir, timing);
        if (plot_cmd->parsed()) return run_plot(log_path, cover_path, out_path);
        if (scenarios_cmd->parsed()) return run_scenarios(emit_dir);
        if (report_cmd->parsed()) return run_report(metric_files);
    } catch (const UncoverableRegion& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUncoverable;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
