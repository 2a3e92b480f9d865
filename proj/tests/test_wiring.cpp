#include <doctest.h>

#include "orchard/combinatorics.hpp"
#include "orchard/error.hpp"
#include "orchard/homogeneous.hpp"
#include "orchard/wiring.hpp"
#include "support.hpp"

using namespace orchard;

namespace {

// Coordinate-level digon oracle for dual line arrangements: the crossing of
// two other dual lines is in the wedge digon of (i, j) iff it lies
// vertically between line i and line j at its abscissa.
DigonCounts coordinate_digons(const Configuration& cfg, const Rat& s, int i, int j) {
    const int n = cfg.size();
    std::vector<Rat> slope(static_cast<size_t>(n)), offset(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const Point& p = cfg.point(k);
        slope[static_cast<size_t>(k - 1)] = p[0] - s * p[1];
        offset[static_cast<size_t>(k - 1)] = s * p[0] + p[1];
    }
    auto line_at = [&](int k, const Rat& x) {
        return Rat(slope[static_cast<size_t>(k - 1)] * x - offset[static_cast<size_t>(k - 1)]);
    };
    DigonCounts counts;
    counts.i = i;
    counts.j = j;
    for (int u = 1; u <= n; ++u) {
        if (u == i || u == j)
            continue;
        for (int v = u + 1; v <= n; ++v) {
            if (v == i || v == j)
                continue;
            const Rat x = (offset[static_cast<size_t>(u - 1)] - offset[static_cast<size_t>(v - 1)]) /
                          (slope[static_cast<size_t>(u - 1)] - slope[static_cast<size_t>(v - 1)]);
            const Rat y = line_at(u, x);
            const Sign si = sign_of(line_at(i, x) - y);
            const Sign sj = sign_of(line_at(j, x) - y);
            if (si != sj)
                ++counts.wedge;
            else
                ++counts.band;
        }
    }
    return counts;
}

} // namespace

TEST_CASE("wiring validation") {
    WiringDiagram ok{3, {1, 2, 1}};
    CHECK_NOTHROW(validate_diagram(ok));
    CHECK(diagram_valid(ok));

    WiringDiagram twice{3, {1, 1, 2}};
    CHECK_FALSE(diagram_valid(twice));
    try {
        validate_diagram(twice);
        FAIL("expected error");
    } catch (const OrchardError& e) {
        CHECK(e.details().at("position") == 2);
    }

    CHECK(diagram_valid(WiringDiagram{2, {1}}));
    CHECK(diagram_valid(WiringDiagram{1, {}}));
    CHECK_FALSE(diagram_valid(WiringDiagram{3, {1, 2}}));    // wrong length
    CHECK_FALSE(diagram_valid(WiringDiagram{3, {1, 3, 1}})); // position out of range
}

TEST_CASE("wiring file round trip") {
    const std::string text = "wiring 3\n1 2 1\n";
    const WiringDiagram wd = parse_wiring(text);
    CHECK(wd.n == 3);
    CHECK(format_wiring(wd) == text);
    CHECK_THROWS_AS(parse_wiring("wiring 3\n1 1 2\n"), OrchardError);
}

TEST_CASE("digon counts satisfy the pair identity") {
    Rng rng(61);
    for (int n : {4, 5, 6}) {
        for (int trial = 0; trial < 5; ++trial) {
            const WiringDiagram wd = random_wiring(n, rng);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    const DigonCounts c = digon_counts(wd, i, j);
                    CHECK(c.wedge + c.band == static_cast<long>(binom(n - 2, 2)));
                }
        }
    }
}

TEST_CASE("pseudoline partition: equivalence on even arrangements, gate on odd") {
    Rng rng(67);
    for (int n : {6, 7}) {
        for (int trial = 0; trial < 6; ++trial) {
            const WiringDiagram wd = random_wiring(n, rng);
            const OrchardPartition part = pseudoline_partition(wd); // hard-asserts the law
            CHECK(part.in_a(1));
            CHECK(part.class_a.size() + part.class_b.size() == static_cast<size_t>(n));
        }
    }
    const WiringDiagram odd = random_wiring(5, rng);
    CHECK_THROWS_AS(pseudoline_partition(odd), OrchardError);
}

TEST_CASE("orientations: exactly two complementary compatible solutions") {
    Rng rng(71);
    for (int n : {4, 5, 8}) {
        for (int trial = 0; trial < 4; ++trial) {
            const WiringDiagram wd = random_wiring(n, rng);
            const OrientationResult res = pseudoline_orientation(wd);
            CHECK(res.primary.forward[0]);
            CHECK(res.complement == res.primary.complement());
            CHECK(orientation_compatible(wd, res.primary));
            CHECK(orientation_compatible(wd, res.complement));
            // no third solution: flipping any single wire breaks a pair
            for (int w = 1; w < n; ++w) {
                WireOrientation variant = res.primary;
                variant.forward[static_cast<size_t>(w)] = !variant.forward[static_cast<size_t>(w)];
                CHECK_FALSE(orientation_compatible(wd, variant));
            }
        }
    }
    const WiringDiagram even = random_wiring(6, rng);
    CHECK_THROWS_AS(pseudoline_orientation(even), OrchardError);
}

TEST_CASE("triangle moves: involution, locality of partition and orientation") {
    Rng rng(73);
    int moved = 0;
    for (int n : {5, 6, 7}) {
        for (int trial = 0; trial < 8; ++trial) {
            const WiringDiagram wd = random_wiring(n, rng);
            for (int pos : triangle_move_positions(wd)) {
                const WiringDiagram after = triangle_move(wd, pos);
                CHECK(diagram_valid(after));
                CHECK(triangle_move(after, pos) == wd); // involution
                const auto wires = triangle_move_wires(wd, pos);
                CHECK(wires.size() == 3);
                ++moved;

                const bool even = binom(n - 2, 2) % 2 == 0;
                auto untouched = [&](int w) {
                    return std::find(wires.begin(), wires.end(), w) == wires.end();
                };
                if (even) {
                    const OrchardPartition before = pseudoline_partition(wd);
                    const OrchardPartition moved_part = pseudoline_partition(after);
                    for (int u = 1; u <= n; ++u)
                        for (int v = u + 1; v <= n; ++v)
                            if (untouched(u) && untouched(v))
                                CHECK(before.same_class(u, v) == moved_part.same_class(u, v));
                } else {
                    const WireOrientation before = pseudoline_orientation(wd).primary;
                    const WireOrientation after_o = pseudoline_orientation(after).primary;
                    bool match_direct = true, match_flipped = true;
                    for (int w = 1; w <= n; ++w) {
                        if (!untouched(w))
                            continue;
                        const bool b = before.forward[static_cast<size_t>(w - 1)];
                        const bool a = after_o.forward[static_cast<size_t>(w - 1)];
                        match_direct = match_direct && a == b;
                        match_flipped = match_flipped && a != b;
                    }
                    CHECK((match_direct || match_flipped));
                }
            }
        }
    }
    CHECK(moved > 10);
    CHECK_THROWS_AS(triangle_move(WiringDiagram{3, {1, 2, 1}}, 2), OrchardError);
}

TEST_CASE("desingularization: tiny cases and the one-sided parity law") {
    // single pseudoline: one one-sided curve
    WireOrientation one;
    one.forward = {true};
    const CurveReport single = desingularize(WiringDiagram{1, {}}, one, SmoothingMode::respect);
    CHECK(single.curves == 1);
    CHECK(single.one_sided == 1);

    // regression goldens for a fixed cyclic diagram
    const WiringDiagram five{5, {1, 2, 3, 4, 1, 2, 3, 1, 2, 1}};
    const WireOrientation fwd = pseudoline_orientation(five).primary;
    const CurveReport respect = desingularize(five, fwd, SmoothingMode::respect);
    CHECK(respect.curves == 3);
    CHECK(respect.one_sided == 1);
    const CurveReport oppose = desingularize(five, fwd, SmoothingMode::oppose);
    CHECK(oppose.curves == 1);
    CHECK(oppose.one_sided == 1);

    Rng rng(79);
    for (int n : {4, 5, 8}) {
        for (int trial = 0; trial < 4; ++trial) {
            const WiringDiagram wd = random_wiring(n, rng);
            const WireOrientation orientation = pseudoline_orientation(wd).primary;
            for (auto mode : {SmoothingMode::respect, SmoothingMode::oppose}) {
                const CurveReport report = desingularize(wd, orientation, mode);
                CHECK(report.curves >= 1);
                CHECK(report.one_sided % 2 == n % 2);
                CHECK(report.one_sided <= report.curves);
            }
        }
    }

    // an incompatible orientation is rejected (flip one wire of a valid one)
    const WiringDiagram wd = random_wiring(5, rng);
    WireOrientation bad = pseudoline_orientation(wd).primary;
    bad.forward[2] = !bad.forward[2];
    CHECK_THROWS_AS(desingularize(wd, bad, SmoothingMode::respect), OrchardError);
}

TEST_CASE("dualize: square works despite parallel connecting lines") {
    const DualizeResult dual = dualize(unit_square(), 0);
    CHECK(dual.diagram.n == 4);
    CHECK(diagram_valid(dual.diagram));
    std::vector<int> wires = dual.wire_of_point;
    std::sort(wires.begin(), wires.end());
    CHECK(wires == std::vector<int>{1, 2, 3, 4});
    CHECK_THROWS_AS(dualize(testsupport::make_config(2, {{0, 0}, {1, 1}, {2, 2}}), 0),
                    OrchardError);
}

TEST_CASE("dualize: digon counts match the coordinate oracle") {
    for (int trial = 0; trial < 4; ++trial) {
        const Configuration cfg = random_generic(6, 2, 8200 + static_cast<std::uint64_t>(trial));
        const DualizeResult dual = dualize(cfg, 5);
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j) {
                const DigonCounts by_wiring =
                    digon_counts(dual.diagram, dual.wire_of_point[static_cast<size_t>(i - 1)],
                                 dual.wire_of_point[static_cast<size_t>(j - 1)]);
                const DigonCounts by_coords = coordinate_digons(cfg, dual.rotation, i, j);
                CHECK(by_wiring.wedge == by_coords.wedge);
                CHECK(by_wiring.band == by_coords.band);
            }
    }
}

TEST_CASE("dualize: wire partition equals the projective point partition") {
    for (int n : {6, 7}) {
        for (int trial = 0; trial < 3; ++trial) {
            const Configuration cfg =
                random_generic(n, 2, 8400 + static_cast<std::uint64_t>(n * 10 + trial));
            const DualizeResult dual = dualize(cfg, 9);
            const OrchardPartition wires = pseudoline_partition(dual.diagram);

            HomogeneousConfiguration h;
            h.dim = 2;
            for (const auto& p : cfg.points)
                h.vectors.push_back({p[0], p[1], Rat(1)});
            const OrchardPartition points = projective_orchard(h, 1);

            // map the point partition through the wire labeling
            auto mapped = [&](const std::vector<int>& labels) {
                std::vector<int> out;
                for (int label : labels)
                    out.push_back(dual.wire_of_point[static_cast<size_t>(label - 1)]);
                std::sort(out.begin(), out.end());
                return out;
            };
            const auto a = mapped(points.class_a);
            const auto b = mapped(points.class_b);
            const bool direct = a == wires.class_a && b == wires.class_b;
            const bool swapped = a == wires.class_b && b == wires.class_a;
            CHECK((direct || swapped));
        }
    }
}

TEST_CASE("stretchable orientation agrees with the coordinate-level rule") {
    // For dual lines with known directions, forward (left to right) means
    // increasing x. A line through two crossings with all coordinates known
    // pins which digon is coherently oriented; the frozen band/wedge rule
    // must reproduce a compatible orientation, which pseudoline_orientation
    // hard-asserts. Here we just exercise it on stretchable diagrams.
    for (int trial = 0; trial < 4; ++trial) {
        const Configuration cfg = random_generic(5, 2, 8600 + static_cast<std::uint64_t>(trial));
        const DualizeResult dual = dualize(cfg, 3);
        CHECK_NOTHROW(pseudoline_orientation(dual.diagram));
    }
}
