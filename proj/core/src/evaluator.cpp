#include "hullchain/evaluator.hpp"

#include <cmath>
#include <string>

#include "hullchain/errors.hpp"

namespace hullchain {

int unit_step(const Unit& u, std::span<const double> lifted, int bit) {
    if (lifted.size() != u.data_weights.size()) {
        throw DimensionError("lifted input has " +
                             std::to_string(lifted.size()) +
                             " entries, unit expects " +
                             std::to_string(u.data_weights.size()));
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < lifted.size(); ++i) {
        acc += u.data_weights[i] * lifted[i];
    }
    if (u.bit_weight.has_value()) {
        acc += *u.bit_weight * bit;
    }
    return acc > kMembershipTol ? 1 : 0;
}

namespace {

std::vector<double> lift_checked(const ChainNetwork& net,
                                 std::span<const double> x) {
    if (x.size() != net.dimension) {
        throw DimensionError("query is " + std::to_string(x.size()) +
                             "-D but the network expects " +
                             std::to_string(net.dimension) + "-D");
    }
    std::vector<double> lifted = lift(x);
    double norm_sq = 0.0;
    for (double v : lifted) norm_sq += v * v;
    if (std::sqrt(norm_sq) > net.domain_bound) {
        throw DomainBoundExceeded(
            "‖x̃‖₂ = " + std::to_string(std::sqrt(norm_sq)) +
            " exceeds the domain bound " + std::to_string(net.domain_bound));
    }
    return lifted;
}

// Shared chain walk so the trace-recording and label-only paths run the
// exact same arithmetic. `on_bit(index, unit, bit)` sees every unit.
template <typename OnBit>
int run_chain(const ChainNetwork& net, std::span<const double> lifted,
              OnBit&& on_bit) {
    int bit = 0;
    for (std::size_t i = 0; i < net.units.size(); ++i) {
        bit = unit_step(net.units[i], lifted, bit);
        on_bit(i, net.units[i], bit);
    }
    return bit;
}

}  // namespace

EvalTrace forward(const ChainNetwork& net, std::span<const double> x) {
    const std::vector<double> lifted = lift_checked(net, x);

    EvalTrace trace;
    trace.bits.reserve(net.units.size());
    bool module_open = false;
    const int last = run_chain(
        net, lifted, [&](std::size_t i, const Unit& u, int bit) {
            trace.bits.push_back(static_cast<std::uint8_t>(bit));
            if (u.kind == UnitKind::Cut) {
                if (!module_open) {
                    trace.first_fired.emplace_back();
                    module_open = true;
                }
                if (bit == 1 && !trace.first_fired.back().has_value()) {
                    trace.first_fired.back() = i;
                }
            } else {
                module_open = false;
            }
        });
    trace.label = last == 1 ? net.positive_class : opposite(net.positive_class);
    return trace;
}

ClassLabel classify(const ChainNetwork& net, std::span<const double> x) {
    const std::vector<double> lifted = lift_checked(net, x);
    const int last = run_chain(net, lifted, [](std::size_t, const Unit&, int) {});
    return last == 1 ? net.positive_class : opposite(net.positive_class);
}

}  // namespace hullchain
