// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Every tolerance here is exact equality; the whole run is
// deterministic from the hard-coded seeds.

#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orchard/combinatorics.hpp"
#include "orchard/error.hpp"
#include "orchard/families.hpp"
#include "orchard/flips.hpp"
#include "orchard/homogeneous.hpp"
#include "orchard/instances.hpp"
#include "orchard/orchard.hpp"
#include "orchard/report.hpp"
#include "orchard/wiring.hpp"

using namespace orchard;

namespace {

struct Check {
    bool pass = true;
    std::string first_failure;
    long asserts = 0;

    void expect(bool condition, const std::string& what) {
        ++asserts;
        if (!condition && pass) {
            pass = false;
            first_failure = what;
        }
    }
};

// ---- corpus for criteria 1-3 ------------------------------------------

struct CorpusEntry {
    Configuration cfg;
    PartitionResult all_pairs;
};

std::vector<CorpusEntry> build_corpus() {
    std::vector<std::pair<int, int>> combos; // (d, n)
    for (int d = 1; d <= 3; ++d)
        for (int n = 3; n <= 10; ++n)
            combos.push_back({d, n});
    for (int n = 3; n <= 8; ++n)
        combos.push_back({4, n});
    std::vector<CorpusEntry> corpus;
    corpus.reserve(200);
    for (int t = 0; t < 200; ++t) {
        const auto [d, n] = combos[static_cast<size_t>(t) % combos.size()];
        CorpusEntry entry;
        entry.cfg = random_generic(n, d, 910000 + static_cast<std::uint64_t>(t), 60);
        entry.all_pairs = orchard_partition(entry.cfg, PartitionMethod::all_pairs);
        corpus.push_back(std::move(entry));
    }
    return corpus;
}

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> c = build_corpus();
    return c;
}

// ---- criteria ----------------------------------------------------------

void criterion_equivalence(Check& check) {
    // orchard_partition(all_pairs) hard-asserts reflexivity, symmetry,
    // transitivity and the two-class bound; reaching here means it held
    check.expect(corpus().size() == 200, "corpus size");
    for (const auto& entry : corpus()) {
        check.expect(static_cast<int>(entry.all_pairs.partition.class_a.size() +
                                      entry.all_pairs.partition.class_b.size()) ==
                         entry.cfg.size(),
                     "partition covers all labels");
        check.expect(entry.all_pairs.partition.in_a(1), "canonical label 1 in class A");
    }
}

void criterion_triple_oracle(Check& check) {
    for (const auto& entry : corpus()) {
        const Configuration& cfg = entry.cfg;
        const int n = cfg.size();
        const PartitionResult anchor = orchard_partition(cfg, PartitionMethod::anchor);
        check.expect(anchor.partition == entry.all_pairs.partition,
                     "anchor partition equals all_pairs");
        check.expect(anchor.stats.predicate_count ==
                         static_cast<unsigned long>(n - 1) * binom(n - 2, cfg.dim - 1),
                     "anchor determinant count is (n-1) C(n-2,d-1)");
        check.expect(entry.all_pairs.stats.predicate_count == binom(n, 2) * binom(n - 2, cfg.dim),
                     "all_pairs sign-test count is C(n,2) C(n-2,d)");
        // sign-product route rebuilt pairwise
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                check.expect(sign_product_related(cfg, i, j) ==
                                 entry.all_pairs.partition.same_class(i, j),
                             "sign product relation equals counting relation");
    }
}

void criterion_lemma_triples(Check& check) {
    for (const auto& entry : corpus()) {
        const int n = entry.cfg.size();
        const bool target = binom_odd(n - 3, entry.cfg.dim - 1);
        const auto& counts = entry.all_pairs.pair_counts;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    const long sum =
                        counts[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                        counts[static_cast<size_t>(j - 1)][static_cast<size_t>(k - 1)] +
                        counts[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)];
                    check.expect((sum % 2 != 0) == target, "triple count parity");
                }
    }
}

void criterion_closed_forms(Check& check) {
    for (int n = 3; n <= 10; ++n) {
        OrchardPartition parity;
        for (int k = 1; k <= n; ++k)
            (k % 2 == 1 ? parity.class_a : parity.class_b).push_back(k);
        check.expect(orchard_partition(line_points(n)).partition == parity,
                     "d=1 partition is the index parity");
    }
    for (const auto& entry : corpus())
        if (entry.cfg.dim == 1) {
            // unsorted input: parity of the position along the line
            const int n = entry.cfg.size();
            std::vector<int> rank(static_cast<size_t>(n) + 1, 0);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (entry.cfg.point(j)[0] < entry.cfg.point(i)[0])
                        ++rank[static_cast<size_t>(i)];
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    check.expect(entry.all_pairs.partition.same_class(i, j) ==
                                     ((rank[static_cast<size_t>(i)] -
                                       rank[static_cast<size_t>(j)]) % 2 == 0),
                                 "random d=1 classes are sorted-position parities");
        }
    for (int d = 1; d <= 4; ++d)
        for (int n = 3; n <= 10; ++n) {
            const Configuration cfg = moment_curve(n, d);
            for (int k = 1; k < n; ++k)
                check.expect(separating_count(cfg, k, k + 1).count == 0,
                             "moment curve consecutive counts vanish");
            const OrchardPartition part = orchard_partition(cfg).partition;
            if (binom_odd(n - 3, d - 1)) {
                check.expect(part.class_a.size() == static_cast<size_t>((n + 1) / 2) &&
                                 part.class_b.size() == static_cast<size_t>(n / 2),
                             "moment curve splits by parity when C(n-3,d-1) is odd");
                for (int k = 1; k <= n; ++k)
                    check.expect(part.in_a(k) == (k % 2 == 1), "moment curve parity classes");
            } else {
                check.expect(part.class_b.empty(),
                             "moment curve partition trivial when C(n-3,d-1) is even");
            }
        }
}

void criterion_leaves(Check& check) {
    for (int d = 1; d <= 5; ++d)
        for (int n = 1; n <= d + 1; ++n) {
            const Configuration cfg =
                random_generic(n, d, 3000 + static_cast<std::uint64_t>(d * 16 + n), 40);
            check.expect(orchard_partition(cfg).partition.class_b.empty(),
                         "simplex is a single class");
            check.expect(orchard_tree(cfg).leaf(), "simplex tree is a leaf");
        }
    for (int k = 2; k <= 4; ++k) {
        const Configuration polygon = convex_polygon(2 * k + 1);
        check.expect(orchard_partition(polygon).partition.class_b.empty(),
                     "odd convex polygon is a single class");
    }
}

void criterion_flip_proposition(Check& check) {
    int done = 0;
    std::uint64_t seed = 40000;
    while (done < 100) {
        const int d = 1 + done % 3;
        const int n = d + 2 + (done % 4);
        Rng rng(seed++);
        const Configuration cfg = random_generic(n, d, seed, 50);
        const FlipResult flip = random_realizable_flip(cfg, rng);
        const FlipCheckReport report = verify_flip_proposition(flip);
        check.expect(report.pass, "flip proposition on random flip");
        ++done;
    }
}

void criterion_parity_laws(Check& check) {
    // d even: the selected-class parity toggles at every flip
    for (auto [n, d] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {6, 4}}) {
        const auto report = pointed_parity_experiment(n, d, 2, 50, 777);
        check.expect(report.law == "toggle" && report.pass, "even-d toggle law");
    }
    // d odd, n odd: constant along 50-step walks
    for (auto [n, d] : std::vector<std::pair<int, int>>{{5, 1}, {7, 1}, {5, 3}, {7, 3}}) {
        const auto report = pointed_parity_experiment(n, d, 2, 50, 778);
        check.expect(report.law == "constant" && report.pass, "odd-d odd-n constant law");
    }
    // d odd, n even: both class parities pinned to pi(n, d)
    const std::vector<std::tuple<int, int, int>> pinned{
        {4, 1, 0}, {6, 1, 1}, {8, 1, 0}, {4, 3, 0}, {6, 3, 1}, {8, 3, 0}, {6, 5, 0}};
    for (auto [n, d, pi] : pinned) {
        const auto report = pointed_parity_experiment(n, d, 3, 50, 779);
        check.expect(report.law == "fixed", "fixed law selected");
        check.expect(report.pi_expected.has_value() && *report.pi_expected == pi,
                     "pi(" + std::to_string(n) + "," + std::to_string(d) + ") value");
        check.expect(report.pass, "fixed parity law holds");
    }
}

GeneralizedConfiguration random_gconfig(const FunctionFamily& family, int n, std::uint64_t seed,
                                        Check& check) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 800; ++attempt) {
        GeneralizedConfiguration gcfg;
        gcfg.family = family;
        for (int i = 0; i < n; ++i) {
            Point p(static_cast<size_t>(family.source_dim));
            for (auto& c : p)
                c = Rat(rng.uniform(-40, 40));
            gcfg.points.push_back(std::move(p));
        }
        if (c_generic(gcfg))
            return gcfg;
        gcfg.points.clear();
    }
    check.expect(false, "C-generic sampling exhausted");
    throw OrchardError(ErrorCode::retry_exhausted, "C-generic sampling exhausted");
}

void criterion_families(Check& check) {
    struct Plan {
        FunctionFamily family;
        int n;
        int instances;
    };
    const std::vector<Plan> plans{{affine_family(2), 7, 13},
                                  {circles_family(), 7, 13},
                                  {conics_family(), 8, 12},
                                  {interpolation_family(3), 7, 12}};
    std::uint64_t seed = 50000;
    for (const auto& plan : plans) {
        for (int t = 0; t < plan.instances; ++t) {
            const GeneralizedConfiguration gcfg =
                random_gconfig(plan.family, plan.n, seed++, check);
            const int n = gcfg.size();
            std::vector<int> pool;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    pool.clear();
                    for (int k = 1; k <= n; ++k)
                        if (k != i && k != j)
                            pool.push_back(k);
                    for_each_subset_of(pool, plan.family.sep_dim, [&](const std::vector<int>& s) {
                        check.expect(c_subset_separates(gcfg, s, i, j, CountRoute::direct) ==
                                         c_subset_separates(gcfg, s, i, j, CountRoute::image),
                                     "direct and image separation agree per subset");
                    });
                }
            check.expect(c_orchard_partition(gcfg) ==
                             orchard_partition(veronese_image(gcfg)).partition,
                         "family partition equals image partition");
        }
    }
    // Example coherence: sphere partition equals the circle-family
    // partition of the stereographic preimages
    for (int t = 0; t < 20; ++t) {
        const GeneralizedConfiguration gcfg =
            random_gconfig(circles_family(), 5 + t % 3, 51000 + static_cast<std::uint64_t>(t), check);
        Configuration plane;
        plane.dim = 2;
        plane.points = gcfg.points;
        const Configuration sphere = inverse_stereographic(plane);
        check.expect(is_generic(sphere), "stereographic lift generic");
        check.expect(orchard_partition(sphere).partition == c_orchard_partition(gcfg),
                     "sphere partition equals circle-family partition");
    }
}

void criterion_spherical(Check& check) {
    std::uint64_t seed = 60000;
    for (int d = 2; d <= 3; ++d)
        for (int n = 3; n <= 8; ++n) {
            for (int t = 0; t < 2; ++t) {
                const HomogeneousConfiguration h = random_hconfig(n, d, true, seed++, 40);
                const SignedPartition base = spherical_orchard(h, 0);
                const bool even = binom(n - 2, d) % 2 == 0;
                check.expect(base.antipodal_equivalent == even, "antipodal rule parity");
                for (int i = 1; i <= n; ++i)
                    check.expect((base.in_a(i) == base.in_a(-i)) == even,
                                 "per-point antipodal rule");
                for (std::uint64_t cs = 1; cs <= 20; ++cs)
                    check.expect(spherical_orchard_with_chart(h, random_chart(h, cs)) == base,
                                 "spherical partition chart independence");
            }
        }
}

void criterion_projective(Check& check) {
    std::uint64_t seed = 70000;
    for (int d = 2; d <= 3; ++d)
        for (int n = 3; n <= 9; ++n) {
            if (binom(n - 2, d) % 2 != 0)
                continue;
            for (int t = 0; t < 2; ++t) {
                const HomogeneousConfiguration h = random_hconfig(n, d, false, seed++, 40);
                const OrchardPartition base = projective_orchard(h, 0);
                for (std::uint64_t cs = 1; cs <= 20; ++cs)
                    check.expect(projective_orchard_with_chart(h, random_chart(h, cs)) == base,
                                 "projective partition chart independence");
            }
        }
}

void criterion_gamma(Check& check) {
    std::uint64_t seed = 80000;
    int done = 0;
    const std::vector<std::pair<int, int>> combos{{4, 2}, {5, 2}, {8, 2}, {9, 2}, {5, 3}, {9, 3}};
    while (done < 50) {
        const auto [n, d] = combos[static_cast<size_t>(done) % combos.size()];
        const HomogeneousConfiguration h = random_hconfig(n, d, false, seed++, 40);
        const TriangleReport report = verify_homological_triviality(h, seed);
        check.expect(report.pass, "all triangles homologically trivial");
        check.expect(report.triangles_checked == static_cast<long>(binom(n, 3)),
                     "triangle count");
        ++done;
    }
}

// coordinate-level digon oracle for dual arrangements (see test_wiring)
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
            const Rat x =
                (offset[static_cast<size_t>(u - 1)] - offset[static_cast<size_t>(v - 1)]) /
                (slope[static_cast<size_t>(u - 1)] - slope[static_cast<size_t>(v - 1)]);
            const Rat y = line_at(u, x);
            if (sign_of(line_at(i, x) - y) != sign_of(line_at(j, x) - y))
                ++counts.wedge;
            else
                ++counts.band;
        }
    }
    return counts;
}

void criterion_pseudolines(Check& check) {
    // (a) 50 dualized stretchable diagrams against coordinate geometry
    std::uint64_t seed = 90000;
    for (int t = 0; t < 50; ++t) {
        const int n = 4 + t % 5; // 4..8
        const Configuration cfg = random_generic(n, 2, seed++, 60);
        const DualizeResult dual = dualize(cfg, seed);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const DigonCounts by_wiring = digon_counts(
                    dual.diagram, dual.wire_of_point[static_cast<size_t>(i - 1)],
                    dual.wire_of_point[static_cast<size_t>(j - 1)]);
                const DigonCounts by_coords = coordinate_digons(cfg, dual.rotation, i, j);
                check.expect(by_wiring.wedge == by_coords.wedge &&
                                 by_wiring.band == by_coords.band,
                             "dual digon counts equal coordinate counts");
            }
        if (binom(n - 2, 2) % 2 == 0) {
            const OrchardPartition wires = pseudoline_partition(dual.diagram);
            HomogeneousConfiguration h;
            h.dim = 2;
            for (const auto& p : cfg.points)
                h.vectors.push_back({p[0], p[1], Rat(1)});
            const OrchardPartition points = projective_orchard(h, 1);
            auto mapped = [&](const std::vector<int>& labels) {
                std::vector<int> out;
                for (int label : labels)
                    out.push_back(dual.wire_of_point[static_cast<size_t>(label - 1)]);
                std::sort(out.begin(), out.end());
                return out;
            };
            const auto a = mapped(points.class_a);
            const auto b = mapped(points.class_b);
            check.expect((a == wires.class_a && b == wires.class_b) ||
                             (a == wires.class_b && b == wires.class_a),
                         "dual wire partition equals the projective point partition");
        }
    }
    // (b) equivalence law on even-parity diagrams (hard-asserted inside)
    Rng rng_b(91001);
    for (int n : {6, 7, 10, 11})
        for (int t = 0; t < 10; ++t) {
            const WiringDiagram wd = random_wiring(n, rng_b);
            try {
                const OrchardPartition part = pseudoline_partition(wd);
                check.expect(part.in_a(1), "canonical wire partition");
            } catch (const OrchardError&) {
                check.expect(false, "equivalence law failed on a random diagram");
            }
        }
    // (c) exactly two complementary orientations on odd-parity diagrams
    Rng rng_c(91002);
    for (int n : {5, 8, 9})
        for (int t = 0; t < 10; ++t) {
            const WiringDiagram wd = random_wiring(n, rng_c);
            const OrientationResult res = pseudoline_orientation(wd);
            check.expect(orientation_compatible(wd, res.primary), "primary compatible");
            check.expect(orientation_compatible(wd, res.complement), "complement compatible");
            check.expect(res.complement == res.primary.complement(), "solutions are complements");
            for (int w = 1; w < n; ++w) {
                WireOrientation variant = res.primary;
                variant.forward[static_cast<size_t>(w)] = !variant.forward[static_cast<size_t>(w)];
                check.expect(!orientation_compatible(wd, variant),
                             "no third compatible orientation");
            }
            // (e) desingularization parity, both modes
            for (auto mode : {SmoothingMode::respect, SmoothingMode::oppose}) {
                const CurveReport curves = desingularize(wd, res.primary, mode);
                check.expect(curves.one_sided % 2 == n % 2, "one-sided curve parity is n mod 2");
            }
        }
    // (e) continued: tiny diagrams, where any orientation is compatible
    Rng rng_e(91004);
    for (int n : {1, 2, 3, 4}) {
        const WiringDiagram wd = n <= 3 ? WiringDiagram{n, {}} : random_wiring(n, rng_e);
        WiringDiagram filled = wd;
        if (n == 2)
            filled.word = {1};
        if (n == 3)
            filled.word = {1, 2, 1};
        WireOrientation all_forward;
        all_forward.forward.assign(static_cast<size_t>(n), true);
        const WireOrientation orientation =
            n >= 4 ? pseudoline_orientation(filled).primary : all_forward;
        check.expect(orientation_compatible(filled, orientation), "tiny diagram compatibility");
        for (auto mode : {SmoothingMode::respect, SmoothingMode::oppose})
            check.expect(desingularize(filled, orientation, mode).one_sided % 2 == n % 2,
                         "tiny diagram one-sided parity");
    }
    // (d) triangle-move locality at every applicable position
    Rng rng_d(91003);
    for (int t = 0; t < 50; ++t) {
        const int n = 5 + t % 4; // 5..8
        const WiringDiagram wd = random_wiring(n, rng_d);
        const bool even = binom(n - 2, 2) % 2 == 0;
        for (int pos : triangle_move_positions(wd)) {
            const WiringDiagram after = triangle_move(wd, pos);
            const auto wires = triangle_move_wires(wd, pos);
            auto untouched = [&](int w) {
                return std::find(wires.begin(), wires.end(), w) == wires.end();
            };
            if (even) {
                const OrchardPartition before_p = pseudoline_partition(wd);
                const OrchardPartition after_p = pseudoline_partition(after);
                for (int u = 1; u <= n; ++u)
                    for (int v = u + 1; v <= n; ++v)
                        if (untouched(u) && untouched(v))
                            check.expect(before_p.same_class(u, v) == after_p.same_class(u, v),
                                         "relation unchanged off the moved triangle");
            } else {
                const WireOrientation before_o = pseudoline_orientation(wd).primary;
                const WireOrientation after_o = pseudoline_orientation(after).primary;
                bool direct = true, flipped = true;
                for (int w = 1; w <= n; ++w) {
                    if (!untouched(w))
                        continue;
                    const bool b = before_o.forward[static_cast<size_t>(w - 1)];
                    const bool a = after_o.forward[static_cast<size_t>(w - 1)];
                    direct = direct && a == b;
                    flipped = flipped && a != b;
                }
                check.expect(direct || flipped, "orientation unchanged off the moved triangle");
            }
        }
    }
}

std::string run_cli(const std::string& args, int& exit_code) {
    const std::string cmd = std::string(ORCHARD_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return out;
    }
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void criterion_cli_goldens(Check& check) {
    const std::string data = ORCHARD_TEST_DATA;
    const std::string golden = ORCHARD_TEST_GOLDEN;
    const std::vector<std::pair<std::string, std::string>> json_cases{
        {"partition --method all_pairs " + data + "/line5.txt", "partition_line5.json"},
        {"partition " + data + "/square.txt", "partition_square.json"},
        {"partition " + data + "/pentagon.txt", "partition_pentagon.json"},
    };
    for (const auto& [args, file] : json_cases) {
        int code = -1;
        const std::string out = run_cli(args, code);
        check.expect(code == 0, "CLI exit code for " + file);
        check.expect(out == slurp(golden + "/" + file), "byte-exact JSON golden " + file);
    }
    // SVG goldens (the d=1 file has no plane rendering; plot rejects it)
    const std::vector<std::pair<std::string, std::string>> svg_cases{
        {"plot " + data + "/square.txt -", "plot_square.svg"},
        {"plot " + data + "/pentagon.txt -", "plot_pentagon.svg"},
    };
    for (const auto& [args, file] : svg_cases) {
        int code = -1;
        const std::string out = run_cli(args, code);
        check.expect(code == 0, "CLI exit code for " + file);
        check.expect(out == slurp(golden + "/" + file), "byte-exact SVG golden " + file);
    }
    int code = -1;
    run_cli("plot " + data + "/line5.txt -", code);
    check.expect(code == 1, "plot rejects d=1 input with a domain error");
}

} // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        std::function<void(Check&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "equivalence relation with at most two classes on 200 random configurations",
         criterion_equivalence},
        {2, "triple oracle agreement and instrumented predicate counts", criterion_triple_oracle},
        {3, "triple separation counts match the target parity", criterion_lemma_triples},
        {4, "closed forms: index parity on the line, moment curves", criterion_closed_forms},
        {5, "leaves: simplices and odd convex polygons", criterion_leaves},
        {6, "flip locality on 100 random flips", criterion_flip_proposition},
        {7, "flip-walk parity laws and fixed class parities", criterion_parity_laws},
        {8, "function families: direct vs image counts, stereographic coherence",
         criterion_families},
        {9, "spherical partitions: antipodal rule and equator independence", criterion_spherical},
        {10, "projective partitions: chart independence", criterion_projective},
        {11, "gamma graph triangles homologically trivial", criterion_gamma},
        {12, "pseudolines: duality oracle, laws, moves, desingularization",
         criterion_pseudolines},
        {13, "CLI byte-exact JSON and SVG goldens", criterion_cli_goldens},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        Check check;
        try {
            criterion.run(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        if (check.pass) {
            std::printf("PASS %2d  %s (%ld checks)\n", criterion.id, criterion.name.c_str(),
                        check.asserts);
        } else {
            ++failures;
            std::printf("FAIL %2d  %s: %s\n", criterion.id, criterion.name.c_str(),
                        check.first_failure.c_str());
        }
        std::fflush(stdout);
    }
    return failures;
}
