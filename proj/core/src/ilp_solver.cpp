#include "seaplan/ilp_solver.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace seaplan {

namespace {

using Clock = std::chrono::steady_clock;

// Canonical form: candidates ascending by id, point lists sorted and
// deduplicated. Makes every later tie-break independent of input order.
SetCoverInstance canonicalize(const SetCoverInstance& inst) {
    SetCoverInstance out;
    out.n_points = inst.n_points;
    out.candidates = inst.candidates;
    for (auto& c : out.candidates) {
        std::sort(c.covered_points.begin(), c.covered_points.end());
        c.covered_points.erase(
            std::unique(c.covered_points.begin(), c.covered_points.end()),
            c.covered_points.end());
    }
    std::sort(out.candidates.begin(), out.candidates.end(),
              [](const CoverCandidate& a, const CoverCandidate& b) { return a.id < b.id; });
    return out;
}

int first_uncoverable_point(const SetCoverInstance& inst) {
    std::vector<char> coverable(inst.n_points, 0);
    for (const auto& c : inst.candidates)
        for (int32_t p : c.covered_points) coverable[p] = 1;
    for (int j = 0; j < inst.n_points; ++j)
        if (!coverable[j]) return j;
    return -1;
}

}  // namespace

CoverSolution greedy_cover(const SetCoverInstance& raw) {
    const auto t0 = Clock::now();
    const SetCoverInstance inst = canonicalize(raw);
    if (const int j = first_uncoverable_point(inst); j >= 0)
        throw InfeasibleInstance("point " + std::to_string(j) + " covered by no candidate", j);

    CoverSolution sol;
    std::vector<char> covered(inst.n_points, 0);
    int remaining = inst.n_points;
    std::vector<char> taken(inst.candidates.size(), 0);

    while (remaining > 0) {
        int best = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < inst.candidates.size(); ++i) {
            if (taken[i]) continue;
            int fresh = 0;
            for (int32_t p : inst.candidates[i].covered_points) fresh += !covered[p];
            if (fresh == 0) continue;
            const double ratio = inst.candidates[i].cost / fresh;
            if (ratio < best_ratio) {
                best_ratio = ratio;
                best = static_cast<int>(i);
            }
        }
        // Feasibility was checked up front, so some candidate always adds points.
        taken[best] = 1;
        sol.selected.push_back(inst.candidates[best].id);
        sol.total_cost += inst.candidates[best].cost;
        for (int32_t p : inst.candidates[best].covered_points) {
            if (!covered[p]) {
                covered[p] = 1;
                --remaining;
            }
        }
        ++sol.iterations;
    }
    std::sort(sol.selected.begin(), sol.selected.end());
    sol.feasible = true;
    sol.proven_optimal = false;
    sol.solve_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return sol;
}

namespace {

struct BnbContext {
    const SetCoverInstance* inst = nullptr;
    std::vector<double> ratio;        // per candidate: cost / |covered|
    std::vector<double> ratio_sum;    // per candidate: sum of point rates it touches
    std::vector<double> point_rate;   // per point: min ratio over covering candidates
    std::vector<std::vector<int32_t>> covering;  // per point: candidate indices, by (ratio, id)

    std::vector<int16_t> cover_count;
    std::vector<char> excluded;
    std::vector<int32_t> chosen;  // candidate indices along the current path

    int uncovered = 0;
    double cost = 0.0;
    double resid = 0.0;  // sum of point_rate over uncovered points

    double best_cost = std::numeric_limits<double>::infinity();
    std::vector<int32_t> best_chosen;

    long iterations = 0;
    long max_iterations = 0;
    bool timed_out = false;
    Clock::time_point deadline;
    bool has_deadline = false;

    double min_cost = 0.0;   // over kept candidates
    double max_cover = 1.0;  // largest |covered_points|

    void include(int32_t ci) {
        cost += inst->candidates[ci].cost;
        chosen.push_back(ci);
        for (int32_t p : inst->candidates[ci].covered_points) {
            if (cover_count[p]++ == 0) {
                --uncovered;
                resid -= point_rate[p];
            }
        }
    }

    void undo(int32_t ci) {
        cost -= inst->candidates[ci].cost;
        chosen.pop_back();
        for (int32_t p : inst->candidates[ci].covered_points) {
            if (--cover_count[p] == 0) {
                ++uncovered;
                resid += point_rate[p];
            }
        }
    }

    void dfs(int first_uncovered_hint) {
        ++iterations;
        if (max_iterations > 0 && iterations > max_iterations) {
            timed_out = true;
            return;
        }
        if (has_deadline && (iterations & 1023) == 0 && Clock::now() >= deadline) {
            timed_out = true;
            return;
        }
        if (uncovered == 0) {
            if (cost < best_cost - 1e-12) {
                best_cost = cost;
                best_chosen = chosen;
            }
            return;
        }
        // Rate bound plus a counting bound: covering the remainder takes at
        // least ceil(uncovered / max_cover) sets of at least min_cost each.
        const double count_bound =
            min_cost * std::ceil(static_cast<double>(uncovered) / max_cover);
        if (cost + std::max(resid, count_bound) >= best_cost - 1e-12) return;

        int j = first_uncovered_hint;
        while (cover_count[j] > 0) ++j;

        std::vector<int32_t> tried;
        for (int32_t ci : covering[j]) {
            if (excluded[ci]) continue;
            // Cheap child bound: ratio_sum overestimates the resid reduction.
            if (cost + inst->candidates[ci].cost + resid - ratio_sum[ci] <
                best_cost - 1e-12) {
                include(ci);
                dfs(j);
                undo(ci);
                if (timed_out) break;
            }
            excluded[ci] = 1;
            tried.push_back(ci);
        }
        for (int32_t ci : tried) excluded[ci] = 0;
    }
};

}  // namespace

CoverSolution solve_bnb(const SetCoverInstance& raw, double time_limit_s,
                        long max_iterations) {
    const auto t0 = Clock::now();
    SetCoverInstance inst = canonicalize(raw);
    if (const int j = first_uncoverable_point(inst); j >= 0)
        throw InfeasibleInstance("point " + std::to_string(j) + " covered by no candidate", j);

    // Greedy incumbent on the same canonical instance.
    CoverSolution incumbent = greedy_cover(inst);

    // Candidates at or above the incumbent cost cannot join a strictly
    // better solution.
    std::erase_if(inst.candidates, [&](const CoverCandidate& c) {
        return c.cost >= incumbent.total_cost - 1e-12;
    });

    BnbContext ctx;
    ctx.inst = &inst;
    const size_t m = inst.candidates.size();
    ctx.ratio.resize(m);
    ctx.ratio_sum.resize(m);
    ctx.point_rate.assign(inst.n_points, std::numeric_limits<double>::infinity());
    ctx.covering.resize(inst.n_points);
    for (size_t i = 0; i < m; ++i) {
        const auto& c = inst.candidates[i];
        ctx.ratio[i] = c.covered_points.empty()
                           ? std::numeric_limits<double>::infinity()
                           : c.cost / static_cast<double>(c.covered_points.size());
        for (int32_t p : c.covered_points) {
            ctx.covering[p].push_back(static_cast<int32_t>(i));
            ctx.point_rate[p] = std::min(ctx.point_rate[p], ctx.ratio[i]);
        }
    }
    for (size_t i = 0; i < m; ++i) {
        double s = 0.0;
        for (int32_t p : inst.candidates[i].covered_points) s += ctx.point_rate[p];
        ctx.ratio_sum[i] = s;
    }
    for (auto& list : ctx.covering) {
        std::sort(list.begin(), list.end(), [&](int32_t a, int32_t b) {
            if (ctx.ratio[a] != ctx.ratio[b]) return ctx.ratio[a] < ctx.ratio[b];
            return inst.candidates[a].id < inst.candidates[b].id;
        });
    }

    ctx.cover_count.assign(inst.n_points, 0);
    ctx.excluded.assign(m, 0);
    ctx.uncovered = inst.n_points;
    ctx.resid = 0.0;
    for (double r : ctx.point_rate) ctx.resid += r;
    ctx.best_cost = incumbent.total_cost;
    ctx.max_iterations = max_iterations;
    ctx.min_cost = std::numeric_limits<double>::infinity();
    for (const auto& c : inst.candidates) {
        ctx.min_cost = std::min(ctx.min_cost, c.cost);
        ctx.max_cover = std::max(ctx.max_cover, static_cast<double>(c.covered_points.size()));
    }
    if (inst.candidates.empty()) ctx.min_cost = 0.0;
    if (time_limit_s > 0.0) {
        ctx.has_deadline = true;
        ctx.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(time_limit_s));
    }

    ctx.dfs(0);

    CoverSolution sol;
    if (ctx.best_chosen.empty() && ctx.best_cost == incumbent.total_cost) {
        sol = incumbent;  // B&B never improved on the greedy seed
    } else {
        for (int32_t ci : ctx.best_chosen) sol.selected.push_back(inst.candidates[ci].id);
        std::sort(sol.selected.begin(), sol.selected.end());
        sol.total_cost = ctx.best_cost;
    }
    sol.feasible = true;
    sol.proven_optimal = !ctx.timed_out;
    sol.iterations = ctx.iterations;
    sol.solve_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return sol;
}

bool verify_cover(const SetCoverInstance& inst, const CoverSolution& sol) {
    std::vector<char> covered(inst.n_points, 0);
    double cost = 0.0;
    for (int id : sol.selected) {
        const auto it = std::find_if(inst.candidates.begin(), inst.candidates.end(),
                                     [id](const CoverCandidate& c) { return c.id == id; });
        if (it == inst.candidates.end()) return false;
        cost += it->cost;
        for (int32_t p : it->covered_points)
            if (p >= 0 && p < inst.n_points) covered[p] = 1;
    }
    for (int j = 0; j < inst.n_points; ++j)
        if (!covered[j]) return false;
    return std::abs(cost - sol.total_cost) <= 1e-9;
}

SetCoverInstance prune_dominated(const SetCoverInstance& raw) {
    const SetCoverInstance inst = canonicalize(raw);
    const size_t m = inst.candidates.size();
    std::vector<char> dropped(m, 0);
    auto subset_of = [](const std::vector<int32_t>& a, const std::vector<int32_t>& b) {
        // Both sorted; is a a subset of b?
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) { ++i; ++j; }
            else if (a[i] > b[j]) ++j;
            else return false;
        }
        return i == a.size();
    };
    for (size_t i = 0; i < m; ++i) {
        if (dropped[i]) continue;
        for (size_t j = 0; j < m; ++j) {
            if (i == j || dropped[j]) continue;
            const auto& ci = inst.candidates[i];
            const auto& cj = inst.candidates[j];
            if (cj.cost > ci.cost) continue;
            if (!subset_of(ci.covered_points, cj.covered_points)) continue;
            const bool exact_tie = cj.cost == ci.cost &&
                                   ci.covered_points.size() == cj.covered_points.size();
            if (exact_tie && cj.id > ci.id) continue;  // keep the lower id
            dropped[i] = 1;
            break;
        }
    }
    SetCoverInstance out;
    out.n_points = inst.n_points;
    for (size_t i = 0; i < m; ++i)
        if (!dropped[i]) out.candidates.push_back(inst.candidates[i]);
    return out;
}

std::string set_cover_to_json(const SetCoverInstance& inst) {
    nlohmann::json j;
    j["n_points"] = inst.n_points;
    j["candidates"] = nlohmann::json::array();
    for (const auto& c : inst.candidates) {
        j["candidates"].push_back(
            {{"id", c.id}, {"points", c.covered_points}, {"cost", c.cost}});
    }
    return j.dump(2);
}

SetCoverInstance set_cover_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    SetCoverInstance inst;
    inst.n_points = j.at("n_points").get<int>();
    for (const auto& cj : j.at("candidates")) {
        CoverCandidate c;
        c.id = cj.at("id").get<int>();
        c.covered_points = cj.at("points").get<std::vector<int32_t>>();
        c.cost = cj.at("cost").get<double>();
        inst.candidates.push_back(std::move(c));
    }
    return inst;
}

}  // namespace seaplan
