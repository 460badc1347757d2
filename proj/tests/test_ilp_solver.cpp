#include <doctest.h>

#include "seaplan/ilp_solver.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <random>

using namespace seaplan;
using seaplan::test::uniform;

namespace {

CoverCandidate cand(int id, std::vector<int32_t> pts, double cost) {
    return {id, std::move(pts), cost};
}

// Exhaustive oracle over all candidate subsets (n_points <= 63).
double brute_force_optimum(const SetCoverInstance& inst) {
    const size_t m = inst.candidates.size();
    REQUIRE(m <= 20);
    std::vector<uint64_t> masks(m, 0);
    for (size_t i = 0; i < m; ++i)
        for (int32_t p : inst.candidates[i].covered_points) masks[i] |= 1ULL << p;
    const uint64_t universe =
        inst.n_points == 64 ? ~0ULL : (1ULL << inst.n_points) - 1;
    double best = std::numeric_limits<double>::infinity();
    for (uint64_t sel = 0; sel < (1ULL << m); ++sel) {
        uint64_t covered = 0;
        double cost = 0;
        for (size_t i = 0; i < m; ++i) {
            if (sel & (1ULL << i)) {
                covered |= masks[i];
                cost += inst.candidates[i].cost;
            }
        }
        if (covered == universe) best = std::min(best, cost);
    }
    return best;
}

SetCoverInstance random_instance(std::mt19937_64& rng, int max_cands, int max_points) {
    SetCoverInstance inst;
    inst.n_points = 2 + static_cast<int>(uniform(rng, 0, max_points - 2));
    const int m = 2 + static_cast<int>(uniform(rng, 0, max_cands - 2));
    for (int i = 0; i < m; ++i) {
        std::vector<int32_t> pts;
        for (int p = 0; p < inst.n_points; ++p)
            if (uniform(rng, 0, 1) < 0.45) pts.push_back(p);
        // Quantized costs provoke ties.
        inst.candidates.push_back(cand(i, std::move(pts), 0.5 * std::floor(uniform(rng, 1, 12))));
    }
    // Guarantee feasibility with a pricey full cover.
    std::vector<int32_t> all(inst.n_points);
    for (int p = 0; p < inst.n_points; ++p) all[p] = p;
    inst.candidates.push_back(cand(m, std::move(all), 9.5));
    return inst;
}

}  // namespace

TEST_CASE("greedy_cover: ratio selection on the worked examples") {
    SetCoverInstance inst;
    inst.n_points = 3;
    inst.candidates = {cand(1, {0, 1}, 10.5), cand(2, {1, 2}, 10.2), cand(3, {0, 1, 2}, 10.9)};
    auto sol = greedy_cover(inst);
    CHECK(sol.selected == std::vector<int>{3});
    CHECK(sol.total_cost == doctest::Approx(10.9));
    CHECK_FALSE(sol.proven_optimal);
    CHECK(verify_cover(inst, sol));

    SetCoverInstance single;
    single.n_points = 4;
    single.candidates = {cand(7, {0, 1, 2, 3}, 3.0)};
    CHECK(greedy_cover(single).selected == std::vector<int>{7});

    SetCoverInstance pair;
    pair.n_points = 2;
    pair.candidates = {cand(1, {0}, 1.0), cand(2, {1}, 1.0), cand(3, {0, 1}, 2.1)};
    sol = greedy_cover(pair);
    CHECK(sol.selected == std::vector<int>{1, 2});
    CHECK(sol.total_cost == doctest::Approx(2.0));
}

TEST_CASE("solve_bnb: exact on the worked examples") {
    SetCoverInstance inst;
    inst.n_points = 3;
    inst.candidates = {cand(1, {0, 1}, 10.5), cand(2, {1, 2}, 10.2), cand(3, {0, 1, 2}, 10.9)};
    auto sol = solve_bnb(inst);
    CHECK(sol.proven_optimal);
    CHECK(sol.selected == std::vector<int>{3});
    CHECK(sol.total_cost == doctest::Approx(brute_force_optimum(inst)));

    SetCoverInstance pair;
    pair.n_points = 2;
    pair.candidates = {cand(1, {0}, 1.0), cand(2, {1}, 1.0), cand(3, {0, 1}, 2.1)};
    sol = solve_bnb(pair);
    CHECK(sol.selected == std::vector<int>{1, 2});
    CHECK(sol.total_cost == doctest::Approx(2.0));
}

TEST_CASE("solve_bnb: mixed-granularity candidates") {
    SetCoverInstance inst;
    inst.n_points = 4;
    inst.candidates = {cand(1, {0, 1}, 1.0), cand(2, {2, 3}, 1.0), cand(3, {0, 1, 2}, 1.4),
                       cand(4, {3}, 0.2)};
    const auto sol = solve_bnb(inst);
    CHECK(sol.proven_optimal);
    // Exhaustive enumeration puts the optimum at {3, 4} with cost 1.6.
    CHECK(sol.total_cost == doctest::Approx(brute_force_optimum(inst)));
    CHECK(sol.total_cost == doctest::Approx(1.6));
    CHECK(sol.selected == std::vector<int>{3, 4});
}

TEST_CASE("solve_bnb matches brute force on random instances") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 60; ++trial) {
        const SetCoverInstance inst = random_instance(rng, 11, 18);
        const auto exact = solve_bnb(inst);
        const auto greedy = greedy_cover(inst);
        CHECK(exact.proven_optimal);
        CHECK(exact.total_cost == doctest::Approx(brute_force_optimum(inst)).epsilon(1e-12));
        CHECK(greedy.total_cost >= exact.total_cost - 1e-9);
        CHECK(verify_cover(inst, exact));
        CHECK(verify_cover(inst, greedy));
    }
}

TEST_CASE("solve_bnb is independent of candidate input order") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 20; ++trial) {
        SetCoverInstance inst = random_instance(rng, 10, 16);
        const auto base = solve_bnb(inst);
        std::shuffle(inst.candidates.begin(), inst.candidates.end(), rng);
        const auto shuffled = solve_bnb(inst);
        CHECK(base.selected == shuffled.selected);
        CHECK(base.total_cost == shuffled.total_cost);
    }
}

TEST_CASE("verify_cover: coverage and cost accounting") {
    SetCoverInstance inst;
    inst.n_points = 3;
    inst.candidates = {cand(1, {0, 1}, 2.0), cand(2, {2}, 1.0)};
    CoverSolution sol;
    sol.selected = {1, 2};
    sol.total_cost = 3.0;
    CHECK(verify_cover(inst, sol));

    sol.selected = {1};  // point 2 uncovered
    sol.total_cost = 2.0;
    CHECK_FALSE(verify_cover(inst, sol));

    sol.selected = {};
    sol.total_cost = 0.0;
    CHECK_FALSE(verify_cover(inst, sol));

    sol.selected = {1, 2};
    sol.total_cost = 2.5;  // wrong sum
    CHECK_FALSE(verify_cover(inst, sol));
}

TEST_CASE("infeasible instances are reported with the uncovered point") {
    SetCoverInstance inst;
    inst.n_points = 3;
    inst.candidates = {cand(1, {0, 1}, 1.0)};
    CHECK_THROWS_AS(greedy_cover(inst), InfeasibleInstance);
    try {
        solve_bnb(inst);
        FAIL("expected InfeasibleInstance");
    } catch (const InfeasibleInstance& e) {
        CHECK(e.uncovered_point == 2);
    }
}

TEST_CASE("time and iteration limits return the incumbent") {
    std::mt19937_64 rng(53);
    SetCoverInstance inst;
    inst.n_points = 60;
    for (int i = 0; i < 40; ++i) {
        std::vector<int32_t> pts;
        for (int p = 0; p < 60; ++p)
            if (uniform(rng, 0, 1) < 0.3) pts.push_back(p);
        inst.candidates.push_back(cand(i, std::move(pts), uniform(rng, 1, 10)));
    }
    std::vector<int32_t> all(60);
    for (int p = 0; p < 60; ++p) all[p] = p;
    inst.candidates.push_back(cand(40, std::move(all), 30.0));

    const auto capped = solve_bnb(inst, 0.0, 50);
    CHECK_FALSE(capped.proven_optimal);
    CHECK(capped.feasible);
    CHECK(verify_cover(inst, capped));
    CHECK(capped.total_cost >= solve_bnb(inst).total_cost - 1e-9);
}

TEST_CASE("prune_dominated preserves the optimum and drops subsets") {
    SetCoverInstance inst;
    inst.n_points = 3;
    inst.candidates = {cand(1, {0, 1}, 3.0), cand(2, {0, 1, 2}, 2.5), cand(3, {2}, 1.0),
                       cand(4, {0, 1}, 3.0)};
    const auto pruned = prune_dominated(inst);
    // 1 is dominated by 2 (superset, cheaper); 4 is an exact tie with 1 but
    // both lose to 2 anyway.
    CHECK(pruned.candidates.size() == 2);
    CHECK(pruned.candidates[0].id == 2);
    CHECK(pruned.candidates[1].id == 3);

    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 30; ++trial) {
        const SetCoverInstance raw = random_instance(rng, 10, 14);
        CHECK(solve_bnb(prune_dominated(raw)).total_cost ==
              doctest::Approx(solve_bnb(raw).total_cost).epsilon(1e-12));
    }
}

TEST_CASE("prune_dominated keeps the lower id on exact ties") {
    SetCoverInstance inst;
    inst.n_points = 2;
    inst.candidates = {cand(5, {0, 1}, 2.0), cand(3, {0, 1}, 2.0)};
    const auto pruned = prune_dominated(inst);
    REQUIRE(pruned.candidates.size() == 1);
    CHECK(pruned.candidates[0].id == 3);
}

TEST_CASE("set cover instances round-trip through JSON") {
    SetCoverInstance inst;
    inst.n_points = 4;
    inst.candidates = {cand(1, {0, 2}, 1.5), cand(2, {1, 3}, 2.25)};
    const SetCoverInstance back = set_cover_from_json(set_cover_to_json(inst));
    CHECK(back.n_points == 4);
    REQUIRE(back.candidates.size() == 2);
    CHECK(back.candidates[0].covered_points == std::vector<int32_t>{0, 2});
    CHECK(back.candidates[1].cost == 2.25);
}
