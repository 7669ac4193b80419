#include "hullchain/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "hullchain/errors.hpp"
#include "hullchain/evaluator.hpp"

namespace hullchain {

int deepest_region(const std::vector<Polytope>& hulls,
                   std::span<const double> x) {
    int deepest = 0;
    bool left = false;
    for (std::size_t k = 0; k < hulls.size(); ++k) {
        if (polytope_contains(hulls[k], x)) {
            if (left) {
                throw NotNested("membership at level " + std::to_string(k + 1) +
                                " after exiting at level " +
                                std::to_string(deepest + 1));
            }
            deepest = static_cast<int>(k) + 1;
        } else {
            left = true;
        }
    }
    return deepest;
}

ClassLabel oracle_classify(const std::vector<Polytope>& hulls,
                           std::span<const double> x) {
    if (hulls.empty()) {
        throw EmptyInput("oracle_classify needs at least one hull");
    }
    const ClassLabel positive = hulls.front().generator_class;
    return deepest_region(hulls, x) % 2 == 1 ? positive : opposite(positive);
}

bool alternating_membership(const std::vector<Polytope>& hulls,
                            std::span<const double> x) {
    bool inner = false;
    for (auto it = hulls.rbegin(); it != hulls.rend(); ++it) {
        inner = polytope_contains(*it, x) && !inner;
    }
    return inner;
}

SampleBox padded_sample_box(const std::vector<Polytope>& hulls) {
    if (hulls.empty()) {
        throw EmptyInput("sample box needs at least one hull");
    }
    const std::size_t n = hulls.front().dimension();
    SampleBox box;
    box.lo.assign(n, std::numeric_limits<double>::infinity());
    box.hi.assign(n, -std::numeric_limits<double>::infinity());
    for (const Polytope& hull : hulls) {
        for (const auto& v : hull.vertices) {
            for (std::size_t i = 0; i < n; ++i) {
                box.lo[i] = std::min(box.lo[i], v[i]);
                box.hi[i] = std::max(box.hi[i], v[i]);
            }
        }
    }
    double max_span = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        max_span = std::max(max_span, box.hi[i] - box.lo[i]);
    }
    const double pad = 0.25 * max_span + 0.1;
    for (std::size_t i = 0; i < n; ++i) {
        box.lo[i] -= pad;
        box.hi[i] += pad;
    }
    return box;
}

namespace {

// Deterministic uniform double in [0,1) from the raw engine output, so a
// seed reproduces the same samples on every platform and stdlib.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

FuzzReport run_differential_fuzz(const ChainNetwork& net, std::size_t samples,
                                 double epsilon, std::uint64_t seed) {
    if (!net.hulls.has_value() || net.hulls->empty()) {
        throw EmptyInput("network carries no hulls to verify against");
    }
    const std::vector<Polytope>& hulls = *net.hulls;
    const SampleBox box = padded_sample_box(hulls);
    const std::size_t n = box.lo.size();

    std::mt19937_64 rng(seed);
    FuzzReport report;
    std::vector<double> x(n);

    // Draw-until-retained keeps the compared count equal to the request;
    // the cap stops a box that is unusable end to end.
    const std::size_t max_draws =
        std::max<std::size_t>(1000, samples * 1000);
    std::size_t draws = 0;
    while (report.compared < samples) {
        if (++draws > max_draws) {
            throw InvalidBound(
                "sampling box yields almost no usable points; drew " +
                std::to_string(draws - 1) + " for " +
                std::to_string(report.compared) + " retained");
        }
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = box.lo[i] + (box.hi[i] - box.lo[i]) * uniform01(rng);
        }
        if (nearest_cut_distance(hulls, x) < epsilon) {
            ++report.skipped_near_cut;
            continue;
        }
        double norm_sq = 1.0;
        for (double v : x) norm_sq += v * v;
        if (std::sqrt(norm_sq) > net.domain_bound) {
            ++report.skipped_out_of_domain;
            continue;
        }
        ++report.compared;
        if (classify(net, x) == oracle_classify(hulls, x)) {
            ++report.agreed;
        } else if (report.first_mismatch.empty()) {
            report.first_mismatch = x;
        }
    }
    return report;
}

}  // namespace hullchain
