#pragma once

#include "seaplan/errors.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace seaplan {

/// One candidate set of a 0-1 weighted set-cover instance.
struct CoverCandidate {
    int id = 0;
    std::vector<int32_t> covered_points;  // indices into [0, n_points)
    double cost = 0.0;                    // >= 0
};

struct SetCoverInstance {
    int n_points = 0;
    std::vector<CoverCandidate> candidates;
};

struct CoverSolution {
    std::vector<int> selected;  // candidate ids, ascending
    double total_cost = 0.0;
    bool proven_optimal = false;
    bool feasible = false;
    long iterations = 0;
    double solve_time_s = 0.0;
};

/// Cost-effectiveness greedy: repeatedly selects the candidate minimizing
/// cost / newly-covered count (ties by id) until all points are covered.
/// Throws InfeasibleInstance when some point is uncovered by every
/// candidate. Never proven optimal.
CoverSolution greedy_cover(const SetCoverInstance& inst);

/// Exact branch-and-bound seeded by the greedy incumbent. Candidates are
/// pre-sorted by (cost / |covered_points|, id); branching picks the lowest
/// -index uncovered point and tries its covering candidates in that order,
/// excluding earlier siblings in later subtrees. The lower bound charges
/// every uncovered point its cheapest per-point rate once. Within the
/// budget the result is proven optimal; on expiry the best incumbent is
/// returned with proven_optimal = false. time_limit_s <= 0 means no wall
/// limit; max_iterations (deterministic node budget) 0 means unlimited.
CoverSolution solve_bnb(const SetCoverInstance& inst, double time_limit_s = 0.0,
                        long max_iterations = 0);

/// True iff the selected candidates cover the whole universe and
/// total_cost matches the sum of their costs within 1e-9.
bool verify_cover(const SetCoverInstance& inst, const CoverSolution& sol);

/// Drops every candidate whose coverage is a subset of another candidate's
/// at less-or-equal cost (exact ties keep the lowest id). Preserves at
/// least one optimal solution.
SetCoverInstance prune_dominated(const SetCoverInstance& inst);

/// Debug serialization: {"n_points", "candidates": [{"id","points","cost"}]}.
std::string set_cover_to_json(const SetCoverInstance& inst);
SetCoverInstance set_cover_from_json(const std::string& text);

}  // namespace seaplan
