#pragma once

#include "seaplan/errors.hpp"
#include "seaplan/geometry.hpp"
#include "seaplan/ilp_solver.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace seaplan {

struct CoverConfig {
    double fine_res_m = 25.0;     // interior/exterior sampling grid
    double coarse_res_m = 100.0;  // candidate-center grid
    std::vector<double> radii_m = {100, 200, 300, 400, 500, 600,
                                   700, 800, 900, 1000, 1100, 1200};
    double alpha = 10.0;  // per-circle penalty
    double beta = 0.1;    // per covered exterior point penalty
    std::optional<double> margin_m;  // box expansion; defaults to max radius
};

void validate_cover_config(const CoverConfig& cfg);

inline double effective_margin(const CoverConfig& cfg) {
    return cfg.margin_m ? *cfg.margin_m : cfg.radii_m.back();
}

/// Uniform samples over the polygon bounding box expanded by the margin,
/// split into interior (mandatory coverage) and exterior (spill) points,
/// plus the coarse grid of candidate centers. Both grids are anchored at
/// the expanded box's lower corner and are boundary-inclusive; points are
/// ordered row-major by North, then East.
struct SampledDomain {
    std::vector<Vec2> x_in;
    std::vector<Vec2> x_out;
    std::vector<Vec2> centers;
    BoundingBox box;  // expanded box the grids span
};

/// Throws DegeneratePolygon when the fine grid finds no interior samples.
SampledDomain sample_domain(const Polygon& poly, const CoverConfig& cfg);

/// Sparse coverage of one candidate circle (center index x radius index):
/// the interior and exterior point indices within the radius (<= compare).
struct CandidateCoverage {
    int32_t center_index = 0;
    int32_t radius_index = 0;
    std::vector<int32_t> interior;
    std::vector<int32_t> exterior;
};

/// Dense candidate enumeration (id = center_index * K + radius_index) of
/// the binary coverage matrices, stored as per-candidate point lists.
std::vector<CandidateCoverage> coverage_matrices(const SampledDomain& dom,
                                                 std::span<const double> radii);

struct CircleCover {
    std::vector<Disc> circles;
    double spill_ratio = 0.0;
    CoverSolution solver_report;
    Polygon region;
};

/// Full pipeline: sample, build the weighted set-cover instance with cost
/// alpha + beta * (exterior points covered) per candidate, solve exactly
/// (incumbent on time limit), decode circles and measure spill. Throws
/// UncoverableRegion when some interior sample is outside every candidate.
CircleCover convexify(const Polygon& poly, const CoverConfig& cfg,
                      double time_limit_s = 0.0, long max_iterations = 0);

/// Grid-counting over-approximation estimate at resolution res:
/// (area(circles U poly) - area(poly)) / area(poly), both areas counted on
/// the same cell grid over the joint bounding box.
double spill_ratio(std::span<const Disc> circles, const Polygon& poly, double res);

/// Fourier-perturbed radial polygon: r(theta) = r0 (1 + sum a_n cos(n
/// theta + phi_n)) for n = 2..n_harmonics+1, amplitudes uniform in
/// [-amp_max/n, amp_max/n], radii clamped to >= 0.1 r0. Deterministic in
/// seed; non-simple draws advance the seed and retry.
Polygon generate_region(uint64_t seed, double r0, int n_harmonics, double amp_max,
                        Vec2 center, int n_vertices);

}  // namespace seaplan
