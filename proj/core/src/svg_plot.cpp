#include "seaplan/svg_plot.hpp"

#include "seaplan/errors.hpp"
#include "seaplan/scenario_io.hpp"

#include <algorithm>
#include <limits>

namespace seaplan {

namespace {

struct Mapper {
    double min_n, max_n, min_e, max_e;
    double scale, width, height;
    static constexpr double kPad = 40.0;

    double x(double e) const { return kPad + (e - min_e) * scale; }
    double y(double n) const { return kPad + (max_n - n) * scale; }
};

constexpr const char* kColors[] = {"#1f6feb", "#d1242f", "#8250df", "#bf8700",
                                   "#1a7f37", "#cf222e"};

}  // namespace

std::string render_svg(const TrajectoryLog& log, const std::vector<Polygon>& regions,
                       const std::vector<Disc>& circles) {
    if (log.steps.empty()) throw SchemaError("plot: empty trajectory log");

    constexpr double inf = std::numeric_limits<double>::infinity();
    double min_n = inf, max_n = -inf, min_e = inf, max_e = -inf;
    auto grow = [&](Vec2 p, double r = 0.0) {
        min_n = std::min(min_n, p.n - r);
        max_n = std::max(max_n, p.n + r);
        min_e = std::min(min_e, p.e - r);
        max_e = std::max(max_e, p.e + r);
    };
    for (const StepRecord& rec : log.steps) {
        grow(rec.ego_position);
        for (const Vec2& p : rec.target_positions) grow(p);
    }
    for (const Polygon& poly : regions)
        for (const Vec2& v : poly.vertices) grow(v);
    for (const Disc& d : circles) grow(d.center, d.radius);

    const double span_n = std::max(max_n - min_n, 1.0);
    const double span_e = std::max(max_e - min_e, 1.0);
    Mapper m{min_n, max_n, min_e, max_e, 0, 0, 0};
    m.scale = 920.0 / std::max(span_n, span_e);
    m.width = 2 * Mapper::kPad + span_e * m.scale;
    m.height = 2 * Mapper::kPad + span_n * m.scale;

    std::string svg;
    auto num = [](double v) { return format_double(std::round(v * 100.0) / 100.0); };
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(m.width) +
           "\" height=\"" + num(m.height) + "\" viewBox=\"0 0 " + num(m.width) + " " +
           num(m.height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"#f6f8fa\"/>\n";

    for (const Polygon& poly : regions) {
        svg += "<polygon class=\"region\" fill=\"#b6d7e8\" stroke=\"#57606a\" "
               "stroke-width=\"1\" points=\"";
        for (size_t i = 0; i < poly.vertices.size(); ++i) {
            if (i) svg += ' ';
            svg += num(m.x(poly.vertices[i].e)) + ',' + num(m.y(poly.vertices[i].n));
        }
        svg += "\"/>\n";
    }
    for (const Disc& d : circles) {
        svg += "<circle class=\"cover\" fill=\"none\" stroke=\"#0969da\" "
               "stroke-dasharray=\"6 4\" stroke-width=\"1.5\" cx=\"" +
               num(m.x(d.center.e)) + "\" cy=\"" + num(m.y(d.center.n)) + "\" r=\"" +
               num(d.radius * m.scale) + "\"/>\n";
    }

    const size_t n_tracks = 1 + log.target_ids.size();
    for (size_t track = 0; track < n_tracks; ++track) {
        const char* color = kColors[track % std::size(kColors)];
        svg += std::string("<polyline class=\"trajectory\" fill=\"none\" stroke=\"") +
               color + "\" stroke-width=\"2\" points=\"";
        for (size_t s = 0; s < log.steps.size(); ++s) {
            const Vec2 p = track == 0 ? log.steps[s].ego_position
                                      : log.steps[s].target_positions[track - 1];
            if (s) svg += ' ';
            svg += num(m.x(p.e)) + ',' + num(m.y(p.n));
        }
        svg += "\"/>\n";
    }

    // Markers are rect/path so cover circles stay the only circle elements.
    const Vec2 start = log.steps.front().ego_position;
    const Vec2 end = log.steps.back().ego_position;
    svg += "<rect class=\"marker start\" fill=\"#1a7f37\" x=\"" + num(m.x(start.e) - 5) +
           "\" y=\"" + num(m.y(start.n) - 5) + "\" width=\"10\" height=\"10\"/>\n";
    const double xe = m.x(end.e);
    const double ye = m.y(end.n);
    svg += "<path class=\"marker end\" stroke=\"#cf222e\" stroke-width=\"3\" d=\"M" +
           num(xe - 5) + " " + num(ye - 5) + " L" + num(xe + 5) + " " + num(ye + 5) +
           " M" + num(xe - 5) + " " + num(ye + 5) + " L" + num(xe + 5) + " " +
           num(ye - 5) + "\"/>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace seaplan
