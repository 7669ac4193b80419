#include "hullchain/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hullchain/errors.hpp"

namespace hullchain {

ClassLabel opposite(ClassLabel label) {
    return label == ClassLabel::Pos ? ClassLabel::Neg : ClassLabel::Pos;
}

std::string class_name(ClassLabel label) {
    return label == ClassLabel::Pos ? "pos" : "neg";
}

double Cut::value(std::span<const double> lifted) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i] * lifted[i];
    }
    return acc;
}

double Cut::spatial_norm() const {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
        acc += weights[i] * weights[i];
    }
    return std::sqrt(acc);
}

double Cut::full_norm() const {
    double acc = 0.0;
    for (double w : weights) {
        acc += w * w;
    }
    return std::sqrt(acc);
}

std::size_t Polytope::dimension() const {
    return vertices.empty() ? 0 : vertices.front().size();
}

std::vector<double> lift(std::span<const double> x) {
    std::vector<double> lifted(x.begin(), x.end());
    lifted.push_back(1.0);
    return lifted;
}

namespace {

struct Vec2 {
    double x;
    double y;

    bool operator==(const Vec2&) const = default;
};

double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool lex_less(const Vec2& a, const Vec2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

std::vector<Vec2> to_vec2(const std::vector<std::vector<double>>& points) {
    std::vector<Vec2> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        if (p.size() != 2) {
            throw DimensionError("convex_hull_2d expects 2-D points, got " +
                                 std::to_string(p.size()) + "-D");
        }
        out.push_back({p[0], p[1]});
    }
    return out;
}

}  // namespace

std::vector<std::vector<double>> convex_hull_2d(
    const std::vector<std::vector<double>>& points) {
    if (points.empty()) {
        throw EmptyInput("convex_hull_2d called on an empty point set");
    }
    std::vector<Vec2> pts = to_vec2(points);
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    if (pts.size() <= 2) {
        std::vector<std::vector<double>> out;
        for (const auto& p : pts) out.push_back({p.x, p.y});
        return out;
    }

    // Monotone chain; strict turns only, so collinear vertices are dropped.
    std::vector<Vec2> hull;
    hull.reserve(2 * pts.size());
    for (const Vec2& p : pts) {
        while (hull.size() >= 2 &&
               cross(hull[hull.size() - 2], hull.back(), p) <= 0.0) {
            hull.pop_back();
        }
        hull.push_back(p);
    }
    const std::size_t lower_size = hull.size() + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (hull.size() >= lower_size &&
               cross(hull[hull.size() - 2], hull.back(), *it) <= 0.0) {
            hull.pop_back();
        }
        hull.push_back(*it);
    }
    hull.pop_back();

    std::vector<std::vector<double>> out;
    out.reserve(hull.size());
    for (const auto& p : hull) out.push_back({p.x, p.y});
    return out;
}

std::vector<Cut> cuts_from_hull(
    const std::vector<std::vector<double>>& vertices) {
    if (vertices.size() < 3) {
        throw DegenerateHull("polygon cuts need at least 3 vertices, got " +
                             std::to_string(vertices.size()));
    }
    std::vector<Vec2> vs = to_vec2(vertices);

    double twice_area = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Vec2& a = vs[i];
        const Vec2& b = vs[(i + 1) % vs.size()];
        twice_area += a.x * b.y - a.y * b.x;
    }
    if (twice_area <= 0.0) {
        throw DegenerateHull(
            "vertex list is not a counterclockwise polygon with positive area");
    }

    std::vector<Cut> cuts;
    cuts.reserve(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Vec2& a = vs[i];
        const Vec2& b = vs[(i + 1) % vs.size()];
        cuts.push_back(Cut{{b.y - a.y, a.x - b.x, a.y * b.x - a.x * b.y}});
    }
    return cuts;
}

std::vector<Cut> degenerate_cuts(
    const std::vector<std::vector<double>>& vertices) {
    std::vector<Vec2> vs = to_vec2(vertices);
    if (vs.size() == 1) {
        const Vec2 p = vs[0];
        return {Cut{{1.0, 0.0, -p.x}}, Cut{{-1.0, 0.0, p.x}},
                Cut{{0.0, 1.0, -p.y}}, Cut{{0.0, -1.0, p.y}}};
    }
    if (vs.size() == 2) {
        const Vec2 a = vs[0];
        const Vec2 b = vs[1];
        double dx = b.x - a.x;
        double dy = b.y - a.y;
        const double len = std::hypot(dx, dy);
        if (len == 0.0) {
            throw DegenerateHull("segment endpoints coincide");
        }
        dx /= len;
        dy /= len;
        // Both supporting-line cuts, then the perpendicular end caps.
        return {Cut{{-dy, dx, dy * a.x - dx * a.y}},
                Cut{{dy, -dx, dx * a.y - dy * a.x}},
                Cut{{-dx, -dy, dx * a.x + dy * a.y}},
                Cut{{dx, dy, -(dx * b.x + dy * b.y)}}};
    }
    throw DegenerateHull("cap cuts are defined for 1 or 2 vertices, got " +
                         std::to_string(vs.size()));
}

Polytope make_polytope(const std::vector<std::vector<double>>& points,
                       ClassLabel generator_class, int level) {
    Polytope p;
    p.vertices = convex_hull_2d(points);
    p.cuts = p.vertices.size() >= 3 ? cuts_from_hull(p.vertices)
                                    : degenerate_cuts(p.vertices);
    p.generator_class = generator_class;
    p.level = level;
    return p;
}

bool polytope_contains(const Polytope& p, std::span<const double> x) {
    if (x.size() != p.dimension()) {
        throw DimensionError("point is " + std::to_string(x.size()) +
                             "-D but polytope is " +
                             std::to_string(p.dimension()) + "-D");
    }
    const std::vector<double> lifted = lift(x);
    for (const Cut& cut : p.cuts) {
        if (cut.value(lifted) > kMembershipTol) return false;
    }
    return true;
}

double nearest_cut_distance(const std::vector<Polytope>& hulls,
                            std::span<const double> x) {
    if (hulls.empty()) {
        throw EmptyInput("nearest_cut_distance needs at least one polytope");
    }
    const std::vector<double> lifted = lift(x);
    double best = std::numeric_limits<double>::infinity();
    for (const Polytope& hull : hulls) {
        if (x.size() != hull.dimension()) {
            throw DimensionError("point is " + std::to_string(x.size()) +
                                 "-D but polytope is " +
                                 std::to_string(hull.dimension()) + "-D");
        }
        for (const Cut& cut : hull.cuts) {
            const double denom = cut.spatial_norm();
            if (denom == 0.0) continue;
            best = std::min(best, std::abs(cut.value(lifted)) / denom);
        }
    }
    return best;
}

}  // namespace hullchain
