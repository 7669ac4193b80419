#pragma once

#include <string>
#include <vector>

#include "hullchain/network.hpp"
#include "hullchain/peeling.hpp"

namespace hullchain {

/// Renders a 2-D network as SVG: a resolution×resolution decision-region
/// raster (each cell colored by the chain's output at the cell center),
/// one outline per hull level, and the training points when given.
std::string render_svg(const ChainNetwork& net,
                       const std::vector<LabeledPoint>& points,
                       int resolution);

}  // namespace hullchain
