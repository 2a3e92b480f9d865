#pragma once

#include <string>
#include <vector>

#include "orchard/rational.hpp"

namespace orchard {

/// Point in R^d, exact rational coordinates.
using Point = std::vector<Rat>;

/// Labeled configuration of n points in R^d. Labels are the 1-based
/// positions in `points`; point order is part of the identity.
struct Configuration {
    int dim = 0;
    std::vector<Point> points;

    int size() const { return static_cast<int>(points.size()); }
    const Point& point(int label) const { return points[static_cast<size_t>(label - 1)]; }
    Point& point(int label) { return points[static_cast<size_t>(label - 1)]; }

    /// Sub-configuration induced by sorted 1-based labels, relabeled 1..m
    /// in the same relative order.
    Configuration induced(const std::vector<int>& labels) const;

    bool operator==(const Configuration&) const = default;
};

// Text format: line 1 = "d n", then n lines of d rationals ("p" or "p/q"),
// whitespace separated; '#' starts a comment. The writer is canonical, so
// parse(format(c)) == c and format is a fixed point.
Configuration parse_configuration(const std::string& text);
Configuration read_configuration(const std::string& path);
std::string format_configuration(const Configuration& cfg);
void write_configuration(const Configuration& cfg, const std::string& path);

} // namespace orchard
