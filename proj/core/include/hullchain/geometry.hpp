#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hullchain {

/// Absolute tolerance applied to the raw product weights·x̃ when deciding
/// halfspace membership. Hull vertices sit exactly on their own cuts in
/// real arithmetic but pick up rounding noise in floating point; closed
/// membership with this slack keeps them inside. The chain evaluator fires
/// its units against the same constant, so compiled networks and the
/// geometric reference place boundary points identically.
inline constexpr double kMembershipTol = 1e-9;

enum class ClassLabel { Pos, Neg };

ClassLabel opposite(ClassLabel label);
std::string class_name(ClassLabel label);

/// One training sample: a finite n-dimensional coordinate vector plus its
/// two-class label.
struct LabeledPoint {
    std::vector<double> coords;
    ClassLabel label = ClassLabel::Pos;
};

/// A homogeneous halfspace boundary. `weights` has n+1 entries; the last
/// slot holds the negated threshold, so a query x with lift x̃ = (x, 1) is
/// strictly outside iff weights·x̃ > kMembershipTol.
struct Cut {
    std::vector<double> weights;

    /// weights·x̃ for an already-lifted query (x̃.back() == 1).
    double value(std::span<const double> lifted) const;

    /// Euclidean norm of the spatial part (first n entries).
    double spatial_norm() const;

    /// Euclidean norm of the full homogeneous vector.
    double full_norm() const;
};

/// One nesting level: the hull's vertex list (counterclockwise for n=2),
/// the cut per facet (or the degenerate cap set), the class whose points
/// generated it, and its 1-based index in the nested sequence.
struct Polytope {
    std::vector<std::vector<double>> vertices;
    std::vector<Cut> cuts;
    ClassLabel generator_class = ClassLabel::Pos;
    int level = 1;

    std::size_t dimension() const;
};

/// Counterclockwise convex hull of a planar point set, collinear interior
/// vertices removed. A single point hulls to itself; a collinear set hulls
/// to its two extreme endpoints. Ties break lexicographically (x, then y).
std::vector<std::vector<double>> convex_hull_2d(
    const std::vector<std::vector<double>>& points);

/// One outward-facing cut per edge of a counterclockwise polygon with at
/// least three vertices and positive area. Edge a→b maps to weights
/// (b_y−a_y, a_x−b_x, a_y·b_x−a_x·b_y).
std::vector<Cut> cuts_from_hull(
    const std::vector<std::vector<double>>& vertices);

/// Cap cuts whose closed intersection is exactly a point or a segment.
/// A point gets four axis-aligned cuts; a segment gets its two opposite
/// supporting-line cuts plus perpendicular end caps through each endpoint.
std::vector<Cut> degenerate_cuts(
    const std::vector<std::vector<double>>& vertices);

/// Hull + cuts in one step: full polygon cuts when the hull has three or
/// more vertices, cap cuts otherwise.
Polytope make_polytope(const std::vector<std::vector<double>>& points,
                       ClassLabel generator_class, int level);

/// Closed membership: true iff weights·x̃ ≤ kMembershipTol for every cut.
bool polytope_contains(const Polytope& p, std::span<const double> x);

/// Euclidean distance from x to the nearest cut hyperplane over every cut
/// of every listed polytope, cap cuts included.
double nearest_cut_distance(const std::vector<Polytope>& hulls,
                            std::span<const double> x);

/// x lifted to homogeneous coordinates: (x_1, …, x_n, 1).
std::vector<double> lift(std::span<const double> x);

}  // namespace hullchain
