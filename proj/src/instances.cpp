#include "orchard/instances.hpp"

#include "orchard/error.hpp"

namespace orchard {

Configuration moment_curve(int n, int d) {
    if (n < 1 || d < 1)
        throw OrchardError(ErrorCode::input, "moment curve needs n >= 1 and d >= 1");
    Configuration cfg;
    cfg.dim = d;
    cfg.points.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        Point p(static_cast<size_t>(d));
        Rat v = 1;
        for (int e = 0; e < d; ++e) {
            v *= k;
            p[static_cast<size_t>(e)] = v;
        }
        cfg.points.push_back(std::move(p));
    }
    return cfg;
}

Configuration convex_polygon(int n) {
    if (n < 3)
        throw OrchardError(ErrorCode::input, "polygon needs n >= 3");
    Configuration cfg;
    cfg.dim = 2;
    cfg.points.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const Rat t = make_rat(2 * k - n - 1, 2);
        const Rat denom = t * t + 1;
        cfg.points.push_back({Rat((1 - t * t) / denom), Rat(2 * t / denom)});
    }
    return cfg;
}

Configuration line_points(int n) {
    if (n < 1)
        throw OrchardError(ErrorCode::input, "need n >= 1");
    Configuration cfg;
    cfg.dim = 1;
    for (int k = 1; k <= n; ++k)
        cfg.points.push_back({Rat(k)});
    return cfg;
}

Configuration unit_square() {
    Configuration cfg;
    cfg.dim = 2;
    cfg.points = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}, {Rat(0), Rat(1)}};
    return cfg;
}

} // namespace orchard
