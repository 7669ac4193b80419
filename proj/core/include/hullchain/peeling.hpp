#pragma once

#include <vector>

#include "hullchain/geometry.hpp"

namespace hullchain {

/// A two-class point set. `positive_class` designates which label drives
/// the outermost hull; everything downstream (region parity, the final
/// output bit) is relative to that choice.
struct Dataset {
    std::vector<LabeledPoint> points;
    std::size_t dimension = 0;
    ClassLabel positive_class = ClassLabel::Pos;
};

/// Removes every coordinate vector carried by both classes from both
/// classes and collapses within-class duplicates to one point. Equality is
/// exact coordinate equality. Throws EmptyClass when nothing survives.
Dataset dedup(const Dataset& d);

/// Builds the alternating nested-hull sequence R_1 ⊇ R_2 ⊇ …: R_1 is the
/// hull of the designated positive class, and each R_{k+1} is the hull of
/// the opposite-class points contained (closed, with the membership
/// tolerance) in R_k. Stops when the candidate set is empty. The input
/// must already be deduped.
std::vector<Polytope> peel(const Dataset& d);

}  // namespace hullchain
