#pragma once

#include <string>

#include "orchard/orchard.hpp"

namespace orchard {

/// Static SVG 1.1 rendering of a plane configuration, markers colored by
/// class (class A cherry red, class B plum). Output bytes are a pure
/// function of the inputs: the viewport is the bounding box plus a 10%
/// margin (minimum extent 2 for degenerate boxes) and all numbers are
/// printed as exact 6-place decimals. When a pair is given, the separating
/// lines spanned by two other points are overlaid, clipped to the viewport.
std::string render_svg(const Configuration& cfg, const OrchardPartition& partition,
                       int pair_i = 0, int pair_j = 0);

} // namespace orchard
