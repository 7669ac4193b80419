#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hullchain/network.hpp"

namespace hullchain {

/// The per-unit bit sequence of one forward pass. `first_fired` holds, per
/// region module, the global index of the first cut unit in that module
/// that emitted a 1 (diagnostic; empty optional when the module stayed
/// silent).
struct EvalTrace {
    std::vector<std::uint8_t> bits;
    std::vector<std::optional<std::size_t>> first_fired;
    ClassLabel label = ClassLabel::Neg;
};

/// One threshold step: 1 iff data_weights·x̃ plus the bit contribution
/// exceeds the membership tolerance. The bit is ignored when the unit has
/// no bit channel.
int unit_step(const Unit& u, std::span<const double> lifted, int bit);

/// Full forward pass: lifts x, threads the bit through every unit in
/// order, and decodes the label from the final bit. The query must be
/// inside the bounded domain ‖x̃‖₂ ≤ domain_bound.
EvalTrace forward(const ChainNetwork& net, std::span<const double> x);

/// Label-only forward pass over the identical unit arithmetic; the cheap
/// path for bulk evaluation.
ClassLabel classify(const ChainNetwork& net, std::span<const double> x);

}  // namespace hullchain
