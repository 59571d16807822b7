#pragma once

#include <string>

#include "banachlab/numrange.hpp"

namespace banachlab {

// Writes an SVG picture of a numerical-range estimate: the outer body
// polygonized over its direction grid, the inner state cloud, coordinate
// axes, and the unit circle for scale.
void emit_plot(const NumericalRangeEstimate& est, const std::string& path,
               const std::string& title = "");

}  // namespace banachlab
