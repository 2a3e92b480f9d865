#pragma once

#include "orchard/config.hpp"

namespace orchard {

/// P_k = (a_k, a_k^2, ..., a_k^d) with a_k = k; generic for every n, d.
Configuration moment_curve(int n, int d);

/// n points on the unit circle in convex (counterclockwise) order via the
/// rational parametrization ((1-t^2)/(1+t^2), 2t/(1+t^2)), t_k = (2k-n-1)/2.
/// No three points on a circle are collinear, so the result is generic.
Configuration convex_polygon(int n);

/// Equally spaced integers 1..n on the line.
Configuration line_points(int n);

/// The unit square (0,0), (1,0), (1,1), (0,1).
Configuration unit_square();

} // namespace orchard
