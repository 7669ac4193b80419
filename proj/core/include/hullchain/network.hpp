#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hullchain/geometry.hpp"

namespace hullchain {

/// Weight on the bit channel of every saturated unit. After scaling, the
/// data term of a cut unit lies in [−1/2, 1/2], so an incoming 1 bit makes
/// the pre-activation at least 2 − 1/2 and the unit always fires.
inline constexpr double kSaturationWeight = 2.0;

enum class UnitKind { Cut, Inverter };

/// One threshold unit of the chain. Every unit reads the lifted input x̃
/// plus at most the previous unit's output bit; only the first unit of the
/// whole network has no bit channel.
struct Unit {
    UnitKind kind = UnitKind::Cut;
    std::vector<double> data_weights;
    std::optional<double> bit_weight;
};

/// The compiled width-one chain: cut units scaled for the bounded domain
/// ‖x̃‖₂ ≤ domain_bound, one inverter closing each region module, and the
/// nested hulls retained for verification and rendering.
struct ChainNetwork {
    std::size_t dimension = 0;
    double domain_bound = 0.0;
    double saturation = kSaturationWeight;
    std::vector<Unit> units;
    ClassLabel positive_class = ClassLabel::Pos;
    std::optional<std::vector<Polytope>> hulls;
};

/// Multiplies the cut weights by α = 1 / (2‖weights‖₂·B). The cut keeps
/// its position in input space while |scaled·x̃| ≤ 1/2 whenever ‖x̃‖₂ ≤ B.
Cut scale_cut(const Cut& c, double domain_bound);

/// The unit subsequence recognizing one polytope: one scaled cut unit per
/// facet followed by an inverter. The module's output bit is 1 iff the
/// query is inside the polytope and the incoming bit is 0.
std::vector<Unit> compile_polytope_module(const Polytope& p,
                                          double domain_bound,
                                          bool has_incoming_bit);

/// Compiles a nested alternating hull sequence into the full chain,
/// innermost region first, each module's inverter feeding the next
/// module's first cut through the saturation weight. The final bit is 1
/// iff the query lies in R_1 − R_2 + R_3 − ….
ChainNetwork compile(const std::vector<Polytope>& hulls, double domain_bound);

enum class DiagnosticCode {
    EmptyNetwork,
    FirstUnitHasBit,
    MissingBitWeight,
    BadCutBitWeight,
    MissingTerminalInverter,
    BadInverterShape,
    CutNormExceedsBound,
    WeightDimensionMismatch,
    UnitCountMismatch,
};

struct Diagnostic {
    DiagnosticCode code;
    std::string message;
};

std::string diagnostic_name(DiagnosticCode code);

/// Structural check of every ChainNetwork invariant. Returns one entry per
/// violation; a clean compiler output yields an empty list.
std::vector<Diagnostic> validate(const ChainNetwork& net);

}  // namespace hullchain
