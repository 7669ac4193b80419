#include "hullchain/network.hpp"

#include <cmath>
#include <string>

#include "hullchain/errors.hpp"

namespace hullchain {

Cut scale_cut(const Cut& c, double domain_bound) {
    if (!(domain_bound > 0.0)) {
        throw InvalidBound("domain bound must be positive, got " +
                           std::to_string(domain_bound));
    }
    const double norm = c.full_norm();
    if (norm == 0.0) {
        throw ZeroWeight("cannot scale an all-zero cut");
    }
    const double alpha = 1.0 / (2.0 * norm * domain_bound);
    Cut scaled;
    scaled.weights.reserve(c.weights.size());
    for (double w : c.weights) {
        scaled.weights.push_back(alpha * w);
    }
    return scaled;
}

namespace {

Unit make_inverter(std::size_t dimension) {
    Unit inv;
    inv.kind = UnitKind::Inverter;
    inv.data_weights.assign(dimension + 1, 0.0);
    inv.data_weights.back() = 0.5;
    inv.bit_weight = -1.0;
    return inv;
}

}  // namespace

std::vector<Unit> compile_polytope_module(const Polytope& p,
                                          double domain_bound,
                                          bool has_incoming_bit) {
    if (p.cuts.empty()) {
        throw EmptyInput("polytope has no cuts to compile");
    }
    std::vector<Unit> units;
    units.reserve(p.cuts.size() + 1);
    bool first = true;
    for (const Cut& cut : p.cuts) {
        Unit u;
        u.kind = UnitKind::Cut;
        u.data_weights = scale_cut(cut, domain_bound).weights;
        if (!first || has_incoming_bit) {
            u.bit_weight = kSaturationWeight;
        }
        first = false;
        units.push_back(std::move(u));
    }
    units.push_back(make_inverter(p.dimension()));
    return units;
}

ChainNetwork compile(const std::vector<Polytope>& hulls, double domain_bound) {
    if (hulls.empty()) {
        throw EmptyInput("compile needs at least one hull");
    }
    if (!(domain_bound > 0.0)) {
        throw InvalidBound("domain bound must be positive, got " +
                           std::to_string(domain_bound));
    }

    const ClassLabel outer_class = hulls.front().generator_class;
    for (std::size_t k = 0; k < hulls.size(); ++k) {
        const ClassLabel expected =
            (k % 2 == 0) ? outer_class : opposite(outer_class);
        if (hulls[k].generator_class != expected) {
            throw NotAlternating("hull at level " + std::to_string(k + 1) +
                                 " is generated by class '" +
                                 class_name(hulls[k].generator_class) +
                                 "', expected '" + class_name(expected) + "'");
        }
        for (const auto& v : hulls[k].vertices) {
            if (k > 0 && !polytope_contains(hulls[k - 1], v)) {
                throw NotNested("a vertex of level " + std::to_string(k + 1) +
                                " lies outside level " + std::to_string(k));
            }
            double norm_sq = 1.0;
            for (double c : v) norm_sq += c * c;
            if (std::sqrt(norm_sq) > domain_bound) {
                throw InvalidBound(
                    "domain bound " + std::to_string(domain_bound) +
                    " does not cover a hull vertex at level " +
                    std::to_string(k + 1));
            }
        }
    }

    ChainNetwork net;
    net.dimension = hulls.front().dimension();
    net.domain_bound = domain_bound;
    net.saturation = kSaturationWeight;
    net.positive_class = outer_class;
    for (auto it = hulls.rbegin(); it != hulls.rend(); ++it) {
        const bool has_incoming_bit = !net.units.empty();
        auto module_units =
            compile_polytope_module(*it, domain_bound, has_incoming_bit);
        net.units.insert(net.units.end(),
                         std::make_move_iterator(module_units.begin()),
                         std::make_move_iterator(module_units.end()));
    }
    net.hulls = hulls;
    return net;
}

std::string diagnostic_name(DiagnosticCode code) {
    switch (code) {
        case DiagnosticCode::EmptyNetwork: return "EmptyNetwork";
        case DiagnosticCode::FirstUnitHasBit: return "FirstUnitHasBit";
        case DiagnosticCode::MissingBitWeight: return "MissingBitWeight";
        case DiagnosticCode::BadCutBitWeight: return "BadCutBitWeight";
        case DiagnosticCode::MissingTerminalInverter:
            return "MissingTerminalInverter";
        case DiagnosticCode::BadInverterShape: return "BadInverterShape";
        case DiagnosticCode::CutNormExceedsBound: return "CutNormExceedsBound";
        case DiagnosticCode::WeightDimensionMismatch:
            return "WeightDimensionMismatch";
        case DiagnosticCode::UnitCountMismatch: return "UnitCountMismatch";
    }
    return "Unknown";
}

std::vector<Diagnostic> validate(const ChainNetwork& net) {
    std::vector<Diagnostic> out;
    const auto report = [&out](DiagnosticCode code, std::string message) {
        out.push_back({code, std::move(message)});
    };

    if (net.units.empty()) {
        report(DiagnosticCode::EmptyNetwork, "network has no units");
        return out;
    }

    if (net.units.front().bit_weight.has_value()) {
        report(DiagnosticCode::FirstUnitHasBit,
               "first unit must have no bit weight");
    }
    if (net.units.back().kind != UnitKind::Inverter) {
        report(DiagnosticCode::MissingTerminalInverter,
               "last unit must be an inverter");
    }

    // Scaling pins ‖scaled‖₂ to exactly 1/(2B); allow rounding headroom.
    const double norm_cap =
        (1.0 + 1e-9) / (2.0 * net.domain_bound);

    for (std::size_t i = 0; i < net.units.size(); ++i) {
        const Unit& u = net.units[i];
        const std::string at = "unit " + std::to_string(i);
        if (u.data_weights.size() != net.dimension + 1) {
            report(DiagnosticCode::WeightDimensionMismatch,
                   at + " has " + std::to_string(u.data_weights.size()) +
                       " data weights, expected " +
                       std::to_string(net.dimension + 1));
            continue;
        }
        if (i > 0 && !u.bit_weight.has_value()) {
            report(DiagnosticCode::MissingBitWeight,
                   at + " has no bit weight");
        }
        if (u.kind == UnitKind::Cut) {
            if (u.bit_weight.has_value() && *u.bit_weight != net.saturation) {
                report(DiagnosticCode::BadCutBitWeight,
                       at + " bit weight differs from the saturation weight");
            }
            double norm_sq = 0.0;
            for (double w : u.data_weights) norm_sq += w * w;
            if (std::sqrt(norm_sq) > norm_cap) {
                report(DiagnosticCode::CutNormExceedsBound,
                       at + " scaled weight norm exceeds 1/(2B)");
            }
        } else {
            bool shape_ok = u.bit_weight == -1.0 &&
                            u.data_weights.back() == 0.5;
            for (std::size_t j = 0; shape_ok && j + 1 < u.data_weights.size();
                 ++j) {
                shape_ok = u.data_weights[j] == 0.0;
            }
            if (!shape_ok) {
                report(DiagnosticCode::BadInverterShape,
                       at + " is not a bias-0.5, bit-weight −1 inverter");
            }
        }
    }

    if (net.hulls.has_value()) {
        std::size_t expected = 0;
        for (const Polytope& hull : *net.hulls) {
            expected += hull.cuts.size() + 1;
        }
        if (expected != net.units.size()) {
            report(DiagnosticCode::UnitCountMismatch,
                   "network has " + std::to_string(net.units.size()) +
                       " units but the hulls imply " +
                       std::to_string(expected));
        }
    }
    return out;
}

}  // namespace hullchain
