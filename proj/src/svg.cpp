#include "orchard/svg.hpp"

#include <algorithm>

#include "orchard/combinatorics.hpp"
#include "orchard/error.hpp"

namespace orchard {

namespace {

constexpr const char* kCherry = "#c0392b"; // class A
constexpr const char* kPlum = "#8e4585";   // class B
constexpr int kPlaces = 6;

struct Box {
    Rat x0, x1, y0, y1;
    Rat width() const { return x1 - x0; }
    Rat height() const { return y1 - y0; }
};

Box viewport(const Configuration& cfg) {
    Rat xmin = cfg.points[0][0], xmax = xmin, ymin = cfg.points[0][1], ymax = ymin;
    for (const auto& p : cfg.points) {
        xmin = std::min(xmin, p[0]);
        xmax = std::max(xmax, p[0]);
        ymin = std::min(ymin, p[1]);
        ymax = std::max(ymax, p[1]);
    }
    // degenerate extents get a fixed window of 2
    if (xmin == xmax) {
        xmin -= 1;
        xmax += 1;
    }
    if (ymin == ymax) {
        ymin -= 1;
        ymax += 1;
    }
    const Rat mx = (xmax - xmin) / 10;
    const Rat my = (ymax - ymin) / 10;
    return Box{xmin - mx, xmax + mx, ymin - my, ymax + my};
}

} // namespace

std::string render_svg(const Configuration& cfg, const OrchardPartition& partition, int pair_i,
                       int pair_j) {
    if (cfg.dim != 2)
        throw OrchardError(ErrorCode::input, "SVG rendering supports only plane configurations");
    if (cfg.points.empty())
        throw OrchardError(ErrorCode::input, "nothing to render");
    const Box box = viewport(cfg);
    const Rat extent = std::max(box.width(), box.height());
    const Rat radius = extent / 50;
    const Rat stroke = extent / 200;
    // y is mirrored inside the box so the picture keeps the usual
    // mathematical orientation
    const auto flip = [&](const Rat& y) { return Rat(box.y0 + box.y1 - y); };
    const auto num = [&](const Rat& v) { return decimal_string(v, kPlaces); };

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
                      num(box.x0) + " " + num(box.y0) + " " + num(box.width()) + " " +
                      num(box.height()) + "\">\n";

    if (pair_i > 0 && pair_j > 0) {
        const int n = cfg.size();
        if (pair_i > n || pair_j > n || pair_i == pair_j)
            throw OrchardError(ErrorCode::input, "bad overlay pair");
        std::vector<int> pool;
        for (int k = 1; k <= n; ++k)
            if (k != pair_i && k != pair_j)
                pool.push_back(k);
        for_each_subset_of(pool, 2, [&](const std::vector<int>& subset) {
            const std::vector<Point> s{cfg.point(subset[0]), cfg.point(subset[1])};
            if (det_sign(s, cfg.point(pair_i)) * det_sign(s, cfg.point(pair_j)) != Sign::minus)
                return;
            // clip the spanned line to the viewport box
            const Point& a = s[0];
            const Rat dx = s[1][0] - a[0];
            const Rat dy = s[1][1] - a[1];
            std::vector<Rat> ts;
            auto consider = [&](const Rat& t) {
                const Rat x = a[0] + t * dx;
                const Rat y = a[1] + t * dy;
                if (x >= box.x0 && x <= box.x1 && y >= box.y0 && y <= box.y1)
                    ts.push_back(t);
            };
            if (dx != 0) {
                consider((box.x0 - a[0]) / dx);
                consider((box.x1 - a[0]) / dx);
            }
            if (dy != 0) {
                consider((box.y0 - a[1]) / dy);
                consider((box.y1 - a[1]) / dy);
            }
            if (ts.empty())
                return;
            const Rat tmin = *std::min_element(ts.begin(), ts.end());
            const Rat tmax = *std::max_element(ts.begin(), ts.end());
            if (tmin == tmax)
                return;
            svg += "  <line x1=\"" + num(a[0] + tmin * dx) + "\" y1=\"" +
                   num(flip(a[1] + tmin * dy)) + "\" x2=\"" + num(a[0] + tmax * dx) + "\" y2=\"" +
                   num(flip(a[1] + tmax * dy)) + "\" stroke=\"#555555\" stroke-width=\"" +
                   num(stroke) + "\"/>\n";
        });
    }

    for (int label = 1; label <= cfg.size(); ++label) {
        const Point& p = cfg.point(label);
        svg += "  <circle cx=\"" + num(p[0]) + "\" cy=\"" + num(flip(p[1])) + "\" r=\"" +
               num(radius) + "\" fill=\"" + (partition.in_a(label) ? kCherry : kPlum) + "\"/>\n";
        svg += "  <text x=\"" + num(p[0] + radius * 3 / 2) + "\" y=\"" +
               num(flip(p[1]) + radius * 3 / 2) + "\" font-size=\"" + num(radius * 3) +
               "\">" + std::to_string(label) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace orchard
