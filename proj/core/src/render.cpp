#include "hullchain/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hullchain/errors.hpp"
#include "hullchain/evaluator.hpp"
#include "hullchain/oracle.hpp"

namespace hullchain {

namespace {

constexpr double kCanvas = 512.0;

const char* kPosRegion = "#cfe0f5";
const char* kNegRegion = "#fdf0cd";
const char* kOutOfDomain = "#e4e4e4";
const char* kPosStroke = "#1f5fa8";
const char* kNegStroke = "#d98a00";

struct WorldToSvg {
    double min_x, min_y, span_x, span_y;

    double x(double wx) const { return (wx - min_x) / span_x * kCanvas; }
    // SVG y grows downward.
    double y(double wy) const { return kCanvas - (wy - min_y) / span_y * kCanvas; }
};

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
}

}  // namespace

std::string render_svg(const ChainNetwork& net,
                       const std::vector<LabeledPoint>& points,
                       int resolution) {
    if (net.dimension != 2) {
        throw DimensionError("SVG rendering is defined for 2-D networks, got " +
                             std::to_string(net.dimension) + "-D");
    }
    if (resolution < 1) {
        throw EmptyInput("raster resolution must be at least 1");
    }

    // Padded view box: the stored hulls when present, the points otherwise.
    double min_x, min_y, max_x, max_y;
    if (net.hulls.has_value() && !net.hulls->empty()) {
        const SampleBox box = padded_sample_box(*net.hulls);
        min_x = box.lo[0];
        min_y = box.lo[1];
        max_x = box.hi[0];
        max_y = box.hi[1];
    } else if (!points.empty()) {
        min_x = min_y = std::numeric_limits<double>::infinity();
        max_x = max_y = -std::numeric_limits<double>::infinity();
        for (const LabeledPoint& p : points) {
            min_x = std::min(min_x, p.coords[0]);
            max_x = std::max(max_x, p.coords[0]);
            min_y = std::min(min_y, p.coords[1]);
            max_y = std::max(max_y, p.coords[1]);
        }
        const double pad =
            0.25 * std::max(max_x - min_x, max_y - min_y) + 0.1;
        min_x -= pad;
        min_y -= pad;
        max_x += pad;
        max_y += pad;
    } else {
        throw EmptyInput("nothing to render: no hulls and no points");
    }

    const WorldToSvg view{min_x, min_y, max_x - min_x, max_y - min_y};
    const double cell = kCanvas / resolution;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "width=\"" << kCanvas << "\" height=\"" << kCanvas
        << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n";

    svg << "  <g id=\"raster\" stroke=\"none\">\n";
    for (int row = 0; row < resolution; ++row) {
        for (int col = 0; col < resolution; ++col) {
            const double cx = min_x + (col + 0.5) / resolution * view.span_x;
            const double cy = min_y + (row + 0.5) / resolution * view.span_y;
            const char* fill = kOutOfDomain;
            try {
                const std::vector<double> q{cx, cy};
                fill = classify(net, q) == ClassLabel::Pos ? kPosRegion
                                                           : kNegRegion;
            } catch (const DomainBoundExceeded&) {
                // cell center outside ‖x̃‖₂ ≤ B: leave the neutral fill
            }
            // row 0 is the bottom of the world box.
            const double sy = kCanvas - (row + 1) * cell;
            svg << "    <rect x=\"" << fmt(col * cell) << "\" y=\""
                << fmt(sy) << "\" width=\"" << fmt(cell) << "\" height=\""
                << fmt(cell) << "\" fill=\"" << fill << "\"/>\n";
        }
    }
    svg << "  </g>\n";

    if (net.hulls.has_value()) {
        svg << "  <g id=\"hulls\" fill=\"none\" stroke-width=\"2\">\n";
        for (const Polytope& hull : *net.hulls) {
            const char* stroke = hull.generator_class == ClassLabel::Pos
                                     ? kPosStroke
                                     : kNegStroke;
            svg << "    <polygon stroke=\"" << stroke << "\" points=\"";
            for (std::size_t i = 0; i < hull.vertices.size(); ++i) {
                if (i > 0) svg << ' ';
                svg << fmt(view.x(hull.vertices[i][0])) << ','
                    << fmt(view.y(hull.vertices[i][1]));
            }
            svg << "\"/>\n";
            if (hull.vertices.size() < 3) {
                // Degenerate level: a bare polygon is invisible, so mark
                // its vertices.
                for (const auto& v : hull.vertices) {
                    svg << "    <circle stroke=\"" << stroke
                        << "\" cx=\"" << fmt(view.x(v[0])) << "\" cy=\""
                        << fmt(view.y(v[1])) << "\" r=\"4\"/>\n";
                }
            }
        }
        svg << "  </g>\n";
    }

    if (!points.empty()) {
        svg << "  <g id=\"points\" stroke=\"#ffffff\" stroke-width=\"0.75\">\n";
        for (const LabeledPoint& p : points) {
            const char* fill =
                p.label == ClassLabel::Pos ? kPosStroke : kNegStroke;
            svg << "    <circle fill=\"" << fill << "\" cx=\""
                << fmt(view.x(p.coords[0])) << "\" cy=\""
                << fmt(view.y(p.coords[1])) << "\" r=\"3\"/>\n";
        }
        svg << "  </g>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace hullchain
