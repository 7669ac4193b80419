#pragma once

#include <cstdint>
#include <vector>

#include "hullchain/network.hpp"

namespace hullchain {

/// Largest k such that x lies (closed) inside R_k, or 0 when x is outside
/// the outermost hull. Membership over nested hulls must be a prefix;
/// NotNested is thrown when it is not.
int deepest_region(const std::vector<Polytope>& hulls,
                   std::span<const double> x);

/// The nesting classifier: the positive class iff the deepest region index
/// is odd.
ClassLabel oracle_classify(const std::vector<Polytope>& hulls,
                           std::span<const double> x);

/// Direct recursive evaluation of R_1 − (R_2 − (R_3 − …)) over closed
/// membership. Agrees with deepest_region parity by construction of the
/// nesting; the two routes stay separate so they can check each other.
bool alternating_membership(const std::vector<Polytope>& hulls,
                            std::span<const double> x);

/// Axis-aligned sampling box: the bounding box of every hull vertex,
/// padded outward so exterior space is exercised too.
struct SampleBox {
    std::vector<double> lo;
    std::vector<double> hi;
};

SampleBox padded_sample_box(const std::vector<Polytope>& hulls);

struct FuzzReport {
    std::size_t agreed = 0;
    std::size_t compared = 0;
    std::size_t skipped_near_cut = 0;
    std::size_t skipped_out_of_domain = 0;
    /// First disagreeing sample, if any (for reporting).
    std::vector<double> first_mismatch;

    bool all_agree() const { return agreed == compared; }
};

/// Differential fuzz run: draws uniform samples in the padded bounding box
/// of the network's stored hulls until `samples` of them have been
/// compared, skipping draws closer than `epsilon` to any cut hyperplane
/// (and the rare draw outside the evaluation domain). Each retained sample
/// is classified by the chain and by the geometric oracle. Fully
/// deterministic for a fixed seed.
FuzzReport run_differential_fuzz(const ChainNetwork& net, std::size_t samples,
                                 double epsilon, std::uint64_t seed);

}  // namespace hullchain
