#include "seaplan/circle_cover.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace seaplan {

void validate_cover_config(const CoverConfig& cfg) {
    if (cfg.fine_res_m <= 0) throw std::invalid_argument("cover config: fine_res_m <= 0");
    if (cfg.coarse_res_m < cfg.fine_res_m)
        throw std::invalid_argument("cover config: coarse_res_m < fine_res_m");
    if (cfg.radii_m.empty()) throw std::invalid_argument("cover config: empty radii_m");
    double prev = 0.0;
    for (double r : cfg.radii_m) {
        if (r <= prev) throw std::invalid_argument("cover config: radii_m not strictly increasing and positive");
        prev = r;
    }
    if (cfg.alpha < 0 || cfg.beta < 0)
        throw std::invalid_argument("cover config: negative alpha or beta");
    if (cfg.margin_m && *cfg.margin_m < 0)
        throw std::invalid_argument("cover config: negative margin_m");
}

namespace {

int grid_count(double extent, double res) {
    return static_cast<int>(std::floor(extent / res + 1e-9)) + 1;
}

}  // namespace

SampledDomain sample_domain(const Polygon& poly, const CoverConfig& cfg) {
    validate_polygon(poly);
    validate_cover_config(cfg);

    const double margin = effective_margin(cfg);
    const BoundingBox tight = bounding_box(poly);
    SampledDomain dom;
    dom.box = {tight.lo - Vec2{margin, margin}, tight.hi + Vec2{margin, margin}};

    const int n_rows = grid_count(dom.box.hi.n - dom.box.lo.n, cfg.fine_res_m);
    const int n_cols = grid_count(dom.box.hi.e - dom.box.lo.e, cfg.fine_res_m);
    for (int i = 0; i < n_rows; ++i) {
        const double n = dom.box.lo.n + i * cfg.fine_res_m;
        for (int j = 0; j < n_cols; ++j) {
            const Vec2 p{n, dom.box.lo.e + j * cfg.fine_res_m};
            (polygon_contains(poly, p) ? dom.x_in : dom.x_out).push_back(p);
        }
    }
    if (dom.x_in.empty())
        throw DegeneratePolygon("no interior samples at fine_res " +
                                std::to_string(cfg.fine_res_m));

    const int c_rows = grid_count(dom.box.hi.n - dom.box.lo.n, cfg.coarse_res_m);
    const int c_cols = grid_count(dom.box.hi.e - dom.box.lo.e, cfg.coarse_res_m);
    dom.centers.reserve(static_cast<size_t>(c_rows) * c_cols);
    for (int i = 0; i < c_rows; ++i) {
        const double n = dom.box.lo.n + i * cfg.coarse_res_m;
        for (int j = 0; j < c_cols; ++j)
            dom.centers.push_back({n, dom.box.lo.e + j * cfg.coarse_res_m});
    }
    return dom;
}

std::vector<CandidateCoverage> coverage_matrices(const SampledDomain& dom,
                                                 std::span<const double> radii) {
    std::vector<CandidateCoverage> table;
    table.reserve(dom.centers.size() * radii.size());
    for (size_t i = 0; i < dom.centers.size(); ++i) {
        for (size_t k = 0; k < radii.size(); ++k) {
            CandidateCoverage cc;
            cc.center_index = static_cast<int32_t>(i);
            cc.radius_index = static_cast<int32_t>(k);
            const double r_sq = radii[k] * radii[k];
            for (size_t p = 0; p < dom.x_in.size(); ++p) {
                if ((dom.x_in[p] - dom.centers[i]).norm_sq() <= r_sq)
                    cc.interior.push_back(static_cast<int32_t>(p));
            }
            for (size_t p = 0; p < dom.x_out.size(); ++p) {
                if ((dom.x_out[p] - dom.centers[i]).norm_sq() <= r_sq)
                    cc.exterior.push_back(static_cast<int32_t>(p));
            }
            table.push_back(std::move(cc));
        }
    }
    return table;
}

namespace {

// Interior points bucketed by fine-grid row for windowed candidate scans.
struct InteriorIndex {
    struct Entry {
        double e;
        int32_t idx;
    };
    std::vector<std::vector<Entry>> rows;
    double lo_n = 0, lo_e = 0, res = 0;
    int n_rows = 0, n_cols = 0;
};

InteriorIndex build_interior_index(const SampledDomain& dom, double fine_res) {
    InteriorIndex ix;
    ix.lo_n = dom.box.lo.n;
    ix.lo_e = dom.box.lo.e;
    ix.res = fine_res;
    ix.n_rows = grid_count(dom.box.hi.n - dom.box.lo.n, fine_res);
    ix.n_cols = grid_count(dom.box.hi.e - dom.box.lo.e, fine_res);
    ix.rows.resize(ix.n_rows);
    for (size_t p = 0; p < dom.x_in.size(); ++p) {
        const int row = static_cast<int>(std::lround((dom.x_in[p].n - ix.lo_n) / fine_res));
        ix.rows[row].push_back({dom.x_in[p].e, static_cast<int32_t>(p)});
    }
    return ix;
}

// Grid points of one row inside the disc, counted by index range with the
// endpoints verified against the exact <= predicate.
long row_points_in_disc(double lo_e, double res, int n_cols, double dn_sq,
                        double ce, double r_sq) {
    const double w_sq = r_sq - dn_sq;
    if (w_sq < 0) return 0;
    const double w = std::sqrt(w_sq);
    auto pred = [&](long j) {
        const double de = lo_e + j * res - ce;
        return dn_sq + de * de <= r_sq;
    };
    long jlo = static_cast<long>(std::ceil((ce - w - lo_e) / res - 1e-9));
    long jhi = static_cast<long>(std::floor((ce + w - lo_e) / res + 1e-9));
    jlo = std::max(jlo, 0L);
    jhi = std::min(jhi, static_cast<long>(n_cols - 1));
    while (jlo > 0 && pred(jlo - 1)) --jlo;
    while (jlo <= jhi && !pred(jlo)) ++jlo;
    while (jhi < n_cols - 1 && pred(jhi + 1)) ++jhi;
    while (jhi >= jlo && !pred(jhi)) --jhi;
    return jlo > jhi ? 0 : jhi - jlo + 1;
}

constexpr size_t kDominancePruneLimit = 3000;

}  // namespace

CircleCover convexify(const Polygon& poly, const CoverConfig& cfg, double time_limit_s,
                      long max_iterations) {
    const SampledDomain dom = sample_domain(poly, cfg);
    const InteriorIndex ix = build_interior_index(dom, cfg.fine_res_m);
    const size_t K = cfg.radii_m.size();

    SetCoverInstance inst;
    inst.n_points = static_cast<int>(dom.x_in.size());
    std::vector<char> coverable(dom.x_in.size(), 0);

    for (size_t i = 0; i < dom.centers.size(); ++i) {
        const Vec2 c = dom.centers[i];
        size_t prev_interior = 0;  // nesting: equal count means equal set
        for (size_t k = 0; k < K; ++k) {
            const double r = cfg.radii_m[k];
            const double r_sq = r * r;

            CoverCandidate cand;
            cand.id = static_cast<int>(i * K + k);
            const int row_lo = std::max(0, static_cast<int>(std::ceil((c.n - r - ix.lo_n) / ix.res - 1e-9)));
            const int row_hi = std::min(ix.n_rows - 1,
                                        static_cast<int>(std::floor((c.n + r - ix.lo_n) / ix.res + 1e-9)));
            long grid_in_disc = 0;
            for (int row = row_lo; row <= row_hi; ++row) {
                const double dn = ix.lo_n + row * ix.res - c.n;
                const double dn_sq = dn * dn;
                grid_in_disc += row_points_in_disc(ix.lo_e, ix.res, ix.n_cols, dn_sq, c.e, r_sq);
                for (const auto& entry : ix.rows[row]) {
                    const double de = entry.e - c.e;
                    if (dn_sq + de * de <= r_sq) cand.covered_points.push_back(entry.idx);
                }
            }
            if (cand.covered_points.empty()) continue;  // useless candidate
            // A larger radius that adds only exterior points is dominated by
            // the smaller one (same interior set, never cheaper).
            if (k > 0 && cand.covered_points.size() == prev_interior) continue;
            prev_interior = cand.covered_points.size();
            std::sort(cand.covered_points.begin(), cand.covered_points.end());
            const long exterior_covered = grid_in_disc - static_cast<long>(cand.covered_points.size());
            cand.cost = cfg.alpha + cfg.beta * static_cast<double>(exterior_covered);
            for (int32_t p : cand.covered_points) coverable[p] = 1;
            inst.candidates.push_back(std::move(cand));
        }
    }

    for (size_t p = 0; p < coverable.size(); ++p) {
        if (!coverable[p])
            throw UncoverableRegion("interior sample " + std::to_string(p) +
                                        " not covered by any candidate circle",
                                    static_cast<int>(p));
    }

    if (inst.candidates.size() <= kDominancePruneLimit) inst = prune_dominated(inst);

    CircleCover cover;
    cover.region = poly;
    cover.solver_report = solve_bnb(inst, time_limit_s, max_iterations);
    for (int id : cover.solver_report.selected) {
        const size_t center_index = static_cast<size_t>(id) / K;
        const size_t radius_index = static_cast<size_t>(id) % K;
        cover.circles.push_back({dom.centers[center_index], cfg.radii_m[radius_index]});
    }
    cover.spill_ratio = spill_ratio(cover.circles, poly, cfg.fine_res_m);
    return cover;
}

double spill_ratio(std::span<const Disc> circles, const Polygon& poly, double res) {
    if (circles.empty()) throw std::invalid_argument("spill_ratio: no circles");
    BoundingBox box = bounding_box(poly);
    box = merge(box, bounding_box(std::vector<Disc>(circles.begin(), circles.end())));

    const int nr = std::max(1L, static_cast<long>(std::ceil((box.hi.n - box.lo.n) / res - 1e-9)));
    const int nc = std::max(1L, static_cast<long>(std::ceil((box.hi.e - box.lo.e) / res - 1e-9)));
    long cnt_poly = 0;
    long cnt_union = 0;
    for (int i = 0; i < nr; ++i) {
        const double n = box.lo.n + (i + 0.5) * res;
        for (int j = 0; j < nc; ++j) {
            const Vec2 p{n, box.lo.e + (j + 0.5) * res};
            const bool in_poly = polygon_contains(poly, p);
            bool in_circle = false;
            for (const Disc& d : circles) {
                if ((p - d.center).norm_sq() <= d.radius * d.radius) {
                    in_circle = true;
                    break;
                }
            }
            cnt_poly += in_poly;
            cnt_union += (in_poly || in_circle);
        }
    }
    if (cnt_poly == 0) throw DegeneratePolygon("spill_ratio: polygon has no cells at this resolution");
    return static_cast<double>(cnt_union - cnt_poly) / static_cast<double>(cnt_poly);
}

namespace {

double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

}  // namespace

Polygon generate_region(uint64_t seed, double r0, int n_harmonics, double amp_max,
                        Vec2 center, int n_vertices) {
    if (r0 <= 0) throw std::invalid_argument("generate_region: r0 <= 0");
    if (amp_max < 0 || amp_max >= 0.9)
        throw std::invalid_argument("generate_region: amp_max outside [0, 0.9)");
    if (n_vertices < 24) throw std::invalid_argument("generate_region: n_vertices < 24");
    if (n_harmonics < 0) throw std::invalid_argument("generate_region: n_harmonics < 0");

    for (uint64_t attempt = 0; attempt < 64; ++attempt) {
        std::mt19937_64 rng(seed + attempt);
        std::vector<double> amp(n_harmonics), phase(n_harmonics);
        for (int h = 0; h < n_harmonics; ++h) {
            const int n = h + 2;  // harmonics start at 2
            amp[h] = (2.0 * next_unit(rng) - 1.0) * amp_max / n;
            phase[h] = next_unit(rng) * 2.0 * kPi;
        }
        Polygon poly;
        poly.vertices.reserve(n_vertices);
        for (int j = 0; j < n_vertices; ++j) {
            const double theta = 2.0 * kPi * j / n_vertices;
            double r = 1.0;
            for (int h = 0; h < n_harmonics; ++h) r += amp[h] * std::cos((h + 2) * theta + phase[h]);
            r = std::max(r * r0, 0.1 * r0);
            poly.vertices.push_back(center + Vec2{r * std::cos(theta), r * std::sin(theta)});
        }
        if (polygon_is_simple(poly)) return poly;
    }
    throw std::runtime_error("generate_region: no simple polygon after 64 seed advances");
}

}  // namespace seaplan
