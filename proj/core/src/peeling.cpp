#include "hullchain/peeling.hpp"

#include <map>
#include <utility>

#include "hullchain/errors.hpp"

namespace hullchain {

Dataset dedup(const Dataset& d) {
    std::map<std::vector<double>, std::pair<bool, bool>> seen;
    for (const LabeledPoint& p : d.points) {
        auto& flags = seen[p.coords];
        (p.label == ClassLabel::Pos ? flags.first : flags.second) = true;
    }

    Dataset out;
    out.dimension = d.dimension;
    out.positive_class = d.positive_class;
    std::map<std::vector<double>, bool> emitted;
    for (const LabeledPoint& p : d.points) {
        const auto& flags = seen.at(p.coords);
        if (flags.first && flags.second) continue;  // carried by both classes
        bool& done = emitted[p.coords];
        if (done) continue;
        done = true;
        out.points.push_back(p);
    }

    if (out.points.empty()) {
        throw EmptyClass("no points survive duplicate removal");
    }
    return out;
}

std::vector<Polytope> peel(const Dataset& d) {
    std::vector<std::vector<double>> candidates;
    for (const LabeledPoint& p : d.points) {
        if (p.label == d.positive_class) candidates.push_back(p.coords);
    }
    if (candidates.empty()) {
        throw EmptyPositiveClass("positive class '" +
                                 class_name(d.positive_class) +
                                 "' has no points");
    }

    // Each level consumes at least the previous hull's vertices, so the
    // recursion halts after at most N+1 levels on deduped data. The cap
    // catches inputs that defeat that argument inside the tolerance band.
    const std::size_t max_levels = d.points.size() + 1;

    std::vector<Polytope> hulls;
    ClassLabel current = d.positive_class;
    while (!candidates.empty()) {
        if (hulls.size() >= max_levels) {
            throw NotNested("peeling exceeded " + std::to_string(max_levels) +
                            " levels; points closer than the membership "
                            "tolerance defeat strict progress");
        }
        hulls.push_back(make_polytope(candidates, current,
                                      static_cast<int>(hulls.size()) + 1));
        current = opposite(current);
        candidates.clear();
        for (const LabeledPoint& p : d.points) {
            if (p.label == current && polytope_contains(hulls.back(), p.coords)) {
                candidates.push_back(p.coords);
            }
        }
    }
    return hulls;
}

}  // namespace hullchain
