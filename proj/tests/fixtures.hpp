#pragma once

// Shared fixtures and the independent containment oracle used to derive
// expected values. The oracle works straight off vertex lists (cross
// products and segment projection), never off Cut weights, so it checks
// the halfspace arithmetic from a separate route.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "hullchain/evaluator.hpp"
#include "hullchain/geometry.hpp"
#include "hullchain/network.hpp"
#include "hullchain/oracle.hpp"
#include "hullchain/peeling.hpp"

namespace fixtures {

using hullchain::ChainNetwork;
using hullchain::ClassLabel;
using hullchain::Dataset;
using hullchain::LabeledPoint;
using hullchain::Polytope;

// --- independent containment oracle ---------------------------------

inline bool point_in_hull_vertices(
    const std::vector<std::vector<double>>& verts,
    const std::vector<double>& p, double tol = 1e-9) {
    if (verts.size() == 1) {
        return std::abs(p[0] - verts[0][0]) <= tol &&
               std::abs(p[1] - verts[0][1]) <= tol;
    }
    if (verts.size() == 2) {
        const double ax = verts[0][0], ay = verts[0][1];
        const double bx = verts[1][0], by = verts[1][1];
        const double dx = bx - ax, dy = by - ay;
        const double len_sq = dx * dx + dy * dy;
        double t = ((p[0] - ax) * dx + (p[1] - ay) * dy) / len_sq;
        t = std::clamp(t, 0.0, 1.0);
        const double qx = ax + t * dx, qy = ay + t * dy;
        return std::hypot(p[0] - qx, p[1] - qy) <= tol;
    }
    // Counterclockwise polygon: inside iff p is on the left of (or on)
    // every edge, with tolerance measured as true distance.
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const auto& a = verts[i];
        const auto& b = verts[(i + 1) % verts.size()];
        const double cross = (b[0] - a[0]) * (p[1] - a[1]) -
                             (b[1] - a[1]) * (p[0] - a[0]);
        const double edge_len = std::hypot(b[0] - a[0], b[1] - a[1]);
        if (cross < -tol * edge_len) return false;
    }
    return true;
}

// --- deterministic sampling ------------------------------------------

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::vector<double> uniform_in_box(const hullchain::SampleBox& box,
                                          std::mt19937_64& rng) {
    std::vector<double> x(box.lo.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = box.lo[i] + (box.hi[i] - box.lo[i]) * uniform01(rng);
    }
    return x;
}

// --- canonical fixtures ----------------------------------------------

// Single triangle {(0,0),(1,0),(0,1)}; domain bound 2 keeps the worked
// numbers small.
inline std::vector<Polytope> triangle_hulls() {
    return {hullchain::make_polytope({{0, 0}, {1, 0}, {0, 1}},
                                     ClassLabel::Pos, 1)};
}

inline ChainNetwork triangle_network() {
    return hullchain::compile(triangle_hulls(), 2.0);
}

// Outer square [0,4]² of positive points with (2,2) in the middle, inner
// square [1,3]² of negative points; peels to square ⊇ square ⊇ point.
inline Dataset nested_squares_dataset() {
    Dataset d;
    d.dimension = 2;
    d.positive_class = ClassLabel::Pos;
    for (auto& c : std::vector<std::vector<double>>{
             {0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}}) {
        d.points.push_back({c, ClassLabel::Pos});
    }
    for (auto& c : std::vector<std::vector<double>>{
             {1, 1}, {3, 1}, {3, 3}, {1, 3}}) {
        d.points.push_back({c, ClassLabel::Neg});
    }
    return d;
}

inline double max_lifted_norm(const Dataset& d) {
    double best = 0.0;
    for (const auto& p : d.points) {
        double norm_sq = 1.0;
        for (double c : p.coords) norm_sq += c * c;
        best = std::max(best, std::sqrt(norm_sq));
    }
    return best;
}

inline std::vector<Polytope> nested_squares_hulls() {
    return hullchain::peel(nested_squares_dataset());
}

inline ChainNetwork nested_squares_network() {
    const Dataset d = nested_squares_dataset();
    return hullchain::compile(hullchain::peel(d), 2.0 * max_lifted_norm(d));
}

// --- random dataset generator ----------------------------------------

// Two-class sets in [0,1]² with up to 200 points per class and exact
// cross-class duplicates injected at a 1% rate. Retries until the deduped
// set keeps its positive class, so every returned dataset peels.
inline Dataset random_dataset(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (;;) {
        Dataset d;
        d.dimension = 2;
        d.positive_class = ClassLabel::Pos;
        const std::size_t n_pos = 1 + rng() % 200;
        const std::size_t n_neg = 1 + rng() % 200;
        for (std::size_t i = 0; i < n_pos + n_neg; ++i) {
            LabeledPoint p;
            p.coords = {uniform01(rng), uniform01(rng)};
            p.label = i < n_pos ? ClassLabel::Pos : ClassLabel::Neg;
            d.points.push_back(std::move(p));
        }
        const std::size_t dups = std::max<std::size_t>(1, d.points.size() / 100);
        for (std::size_t i = 0; i < dups; ++i) {
            const LabeledPoint& donor = d.points[rng() % d.points.size()];
            d.points.push_back({donor.coords, hullchain::opposite(donor.label)});
        }
        try {
            const Dataset clean = hullchain::dedup(d);
            hullchain::peel(clean);
            return d;
        } catch (const hullchain::Error&) {
            continue;  // everything vanished or positives died; redraw
        }
    }
}

}  // namespace fixtures
