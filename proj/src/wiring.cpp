#include "orchard/wiring.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "orchard/combinatorics.hpp"
#include "orchard/error.hpp"

namespace orchard {

WiringDiagram parse_wiring(const std::string& text) {
    std::istringstream lines(text);
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(lines, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream words(line);
        std::string w;
        while (words >> w)
            tokens.push_back(w);
    }
    if (tokens.size() < 2 || tokens[0] != "wiring")
        throw OrchardError(ErrorCode::input, "wiring header 'wiring n' missing");
    const int n = std::stoi(tokens[1]);
    if (n < 1)
        throw OrchardError(ErrorCode::input, "wiring needs n >= 1");
    WiringDiagram wd;
    wd.n = n;
    for (size_t t = 2; t < tokens.size(); ++t)
        wd.word.push_back(std::stoi(tokens[t]));
    validate_diagram(wd);
    return wd;
}

WiringDiagram read_wiring(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw OrchardError(ErrorCode::io, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_wiring(buf.str());
}

std::string format_wiring(const WiringDiagram& wd) {
    std::string out = "wiring " + std::to_string(wd.n) + "\n";
    for (size_t i = 0; i < wd.word.size(); ++i)
        out += (i ? " " : "") + std::to_string(wd.word[i]);
    if (!wd.word.empty())
        out += "\n";
    return out;
}

namespace {

// Wire occupancy tracker for replaying a word.
struct Levels {
    std::vector<int> wire_at; // level (1-based) -> wire label
    std::vector<int> level_of; // wire label (1-based) -> level

    explicit Levels(int n) : wire_at(static_cast<size_t>(n) + 1), level_of(static_cast<size_t>(n) + 1) {
        for (int i = 1; i <= n; ++i) {
            wire_at[static_cast<size_t>(i)] = i;
            level_of[static_cast<size_t>(i)] = i;
        }
    }

    void swap_at(int k) {
        const int u = wire_at[static_cast<size_t>(k)];
        const int v = wire_at[static_cast<size_t>(k) + 1];
        std::swap(wire_at[static_cast<size_t>(k)], wire_at[static_cast<size_t>(k) + 1]);
        std::swap(level_of[static_cast<size_t>(u)], level_of[static_cast<size_t>(v)]);
    }
};

} // namespace

void validate_diagram(const WiringDiagram& wd) {
    const int n = wd.n;
    const size_t expected = static_cast<size_t>(binom(n, 2));
    if (wd.word.size() != expected)
        throw OrchardError(ErrorCode::input,
                           "wiring word must have C(n,2) = " + std::to_string(expected) +
                               " swaps, got " + std::to_string(wd.word.size()));
    Levels lv(n);
    std::vector<std::vector<bool>> crossed(static_cast<size_t>(n) + 1,
                                           std::vector<bool>(static_cast<size_t>(n) + 1, false));
    for (size_t r = 0; r < wd.word.size(); ++r) {
        const int k = wd.word[r];
        if (k < 1 || k > n - 1)
            throw OrchardError(ErrorCode::input,
                               "swap position out of range at word position " + std::to_string(r + 1),
                               nlohmann::json{{"position", r + 1}});
        const int u = lv.wire_at[static_cast<size_t>(k)];
        const int v = lv.wire_at[static_cast<size_t>(k) + 1];
        if (crossed[static_cast<size_t>(u)][static_cast<size_t>(v)])
            throw OrchardError(ErrorCode::input,
                               "wires " + std::to_string(u) + " and " + std::to_string(v) +
                                   " swap twice (word position " + std::to_string(r + 1) + ")",
                               nlohmann::json{{"position", r + 1}, {"wires", {u, v}}});
        crossed[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
        crossed[static_cast<size_t>(v)][static_cast<size_t>(u)] = true;
        lv.swap_at(k);
    }
}

bool diagram_valid(const WiringDiagram& wd) {
    try {
        validate_diagram(wd);
        return true;
    } catch (const OrchardError&) {
        return false;
    }
}

namespace {

// Digon counts for every pair in a single replay. A crossing of two other
// wires at levels (k, k+1) lies in the wedge digon of (i, j) iff exactly
// one of i, j runs above it there.
std::vector<std::vector<DigonCounts>> all_digon_counts(const WiringDiagram& wd) {
    const int n = wd.n;
    std::vector<std::vector<DigonCounts>> counts(static_cast<size_t>(n) + 1,
                                                 std::vector<DigonCounts>(static_cast<size_t>(n) + 1));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            counts[static_cast<size_t>(i)][static_cast<size_t>(j)].i = std::min(i, j);
            counts[static_cast<size_t>(i)][static_cast<size_t>(j)].j = std::max(i, j);
        }
    Levels lv(n);
    for (int k : wd.word) {
        const int u = lv.wire_at[static_cast<size_t>(k)];
        const int v = lv.wire_at[static_cast<size_t>(k) + 1];
        for (int i = 1; i <= n; ++i) {
            if (i == u || i == v)
                continue;
            for (int j = i + 1; j <= n; ++j) {
                if (j == u || j == v)
                    continue;
                const bool above_i = lv.level_of[static_cast<size_t>(i)] > k;
                const bool above_j = lv.level_of[static_cast<size_t>(j)] > k;
                auto& c = counts[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (above_i != above_j)
                    ++c.wedge;
                else
                    ++c.band;
                counts[static_cast<size_t>(j)][static_cast<size_t>(i)] = c;
            }
        }
        lv.swap_at(k);
    }
    return counts;
}

} // namespace

DigonCounts digon_counts(const WiringDiagram& wd, int i, int j) {
    validate_diagram(wd);
    if (i < 1 || i > wd.n || j < 1 || j > wd.n || i == j)
        throw OrchardError(ErrorCode::input, "bad wire pair");
    return all_digon_counts(wd)[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

OrchardPartition pseudoline_partition(const WiringDiagram& wd) {
    validate_diagram(wd);
    const int n = wd.n;
    if (binom(n - 2, 2) % 2 != 0)
        throw OrchardError(ErrorCode::parity_unsupported,
                           "C(n-2,2) is odd: no wire partition; the arrangement carries the two "
                           "compatible orientations instead",
                           nlohmann::json{{"n", n}, {"binomial", binom(n - 2, 2)}});
    const auto counts = all_digon_counts(wd);
    const bool target = binom_odd(n - 3, 2);
    std::vector<std::vector<bool>> rel(static_cast<size_t>(n) + 1,
                                       std::vector<bool>(static_cast<size_t>(n) + 1, true));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const bool related =
                (counts[static_cast<size_t>(i)][static_cast<size_t>(j)].wedge % 2 != 0) == target;
            rel[static_cast<size_t>(i)][static_cast<size_t>(j)] = related;
            rel[static_cast<size_t>(j)][static_cast<size_t>(i)] = related;
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                if (rel[static_cast<size_t>(i)][static_cast<size_t>(j)] &&
                    rel[static_cast<size_t>(j)][static_cast<size_t>(k)] &&
                    !rel[static_cast<size_t>(i)][static_cast<size_t>(k)])
                    throw_internal("pseudoline relation failed transitivity");
    OrchardPartition part;
    for (int k = 1; k <= n; ++k)
        (rel[1][static_cast<size_t>(k)] ? part.class_a : part.class_b).push_back(k);
    for (size_t a = 0; a < part.class_b.size(); ++a)
        for (size_t b = a + 1; b < part.class_b.size(); ++b)
            if (!rel[static_cast<size_t>(part.class_b[a])][static_cast<size_t>(part.class_b[b])])
                throw_internal("pseudoline relation produced more than two classes");
    return part;
}

WireOrientation WireOrientation::complement() const {
    WireOrientation out = *this;
    out.forward.flip();
    return out;
}

namespace {

bool pair_compatible(const DigonCounts& counts, bool same_direction, bool target) {
    // equal direction bits -> the band digon is the coherently oriented one
    const long coherent = same_direction ? counts.band : counts.wedge;
    return (coherent % 2 != 0) == target;
}

} // namespace

bool orientation_compatible(const WiringDiagram& wd, const WireOrientation& orientation) {
    validate_diagram(wd);
    if (orientation.forward.size() != static_cast<size_t>(wd.n))
        throw OrchardError(ErrorCode::input, "orientation must assign every wire a direction");
    const auto counts = all_digon_counts(wd);
    const bool target = binom_odd(wd.n - 3, 2);
    for (int i = 1; i <= wd.n; ++i)
        for (int j = i + 1; j <= wd.n; ++j) {
            const bool same = orientation.forward[static_cast<size_t>(i - 1)] ==
                              orientation.forward[static_cast<size_t>(j - 1)];
            if (!pair_compatible(counts[static_cast<size_t>(i)][static_cast<size_t>(j)], same, target))
                return false;
        }
    return true;
}

OrientationResult pseudoline_orientation(const WiringDiagram& wd) {
    validate_diagram(wd);
    const int n = wd.n;
    if (binom(n - 2, 2) % 2 == 0)
        throw OrchardError(ErrorCode::parity_unsupported,
                           "C(n-2,2) is even: the arrangement carries a wire partition, not a "
                           "compatible orientation",
                           nlohmann::json{{"n", n}, {"binomial", binom(n - 2, 2)}});
    const auto counts = all_digon_counts(wd);
    const bool target = binom_odd(n - 3, 2);
    WireOrientation orientation;
    orientation.forward.assign(static_cast<size_t>(n), true);
    for (int j = 2; j <= n; ++j) {
        const auto& c = counts[1][static_cast<size_t>(j)];
        const bool same_works = pair_compatible(c, true, target);
        const bool diff_works = pair_compatible(c, false, target);
        if (same_works == diff_works)
            throw_internal("digon parities do not force the orientation at a pair");
        orientation.forward[static_cast<size_t>(j - 1)] = same_works;
    }
    // Forced by the pairs (1, j); the theorem's content is that the rest
    // of the pairs agree.
    if (!orientation_compatible(wd, orientation))
        throw_internal("forced orientation is not compatible at every pair");
    return OrientationResult{orientation, orientation.complement()};
}

std::vector<int> triangle_move_positions(const WiringDiagram& wd) {
    std::vector<int> out;
    for (size_t r = 0; r + 2 < wd.word.size(); ++r)
        if (wd.word[r] == wd.word[r + 2] && std::abs(wd.word[r + 1] - wd.word[r]) == 1)
            out.push_back(static_cast<int>(r) + 1);
    return out;
}

std::vector<int> triangle_move_wires(const WiringDiagram& wd, int position) {
    validate_diagram(wd);
    if (position < 1 || static_cast<size_t>(position) + 2 > wd.word.size())
        throw OrchardError(ErrorCode::input, "triangle move position out of range");
    const size_t r = static_cast<size_t>(position) - 1;
    const int k = wd.word[r];
    const int kp = wd.word[r + 1];
    if (wd.word[r + 2] != k || std::abs(kp - k) != 1)
        throw OrchardError(ErrorCode::input, "no triangle-move pattern at this position",
                           nlohmann::json{{"position", position}});
    Levels lv(wd.n);
    for (size_t s = 0; s < r; ++s)
        lv.swap_at(wd.word[s]);
    const int lo = std::min(k, kp);
    return {lv.wire_at[static_cast<size_t>(lo)], lv.wire_at[static_cast<size_t>(lo) + 1],
            lv.wire_at[static_cast<size_t>(lo) + 2]};
}

WiringDiagram triangle_move(const WiringDiagram& wd, int position) {
    validate_diagram(wd);
    if (position < 1 || static_cast<size_t>(position) + 2 > wd.word.size())
        throw OrchardError(ErrorCode::input, "triangle move position out of range");
    const size_t r = static_cast<size_t>(position) - 1;
    const int k = wd.word[r];
    const int kp = wd.word[r + 1];
    if (wd.word[r + 2] != k || std::abs(kp - k) != 1)
        throw OrchardError(ErrorCode::input, "no triangle-move pattern at this position",
                           nlohmann::json{{"position", position}});
    WiringDiagram out = wd;
    out.word[r] = kp;
    out.word[r + 1] = k;
    out.word[r + 2] = kp;
    validate_diagram(out);
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }

    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

} // namespace

CurveReport desingularize(const WiringDiagram& wd, const WireOrientation& orientation,
                          SmoothingMode mode) {
    validate_diagram(wd);
    if (!orientation_compatible(wd, orientation))
        throw OrchardError(ErrorCode::input, "orientation is not compatible with the arrangement");
    const int n = wd.n;
    const int m = static_cast<int>(wd.word.size());
    // nodes are (slot, level), slot 0..m left to right
    auto node = [&](int slot, int level) { return slot * n + (level - 1); };
    UnionFind uf(static_cast<size_t>((m + 1) * n));

    Levels lv(n);
    for (int r = 1; r <= m; ++r) {
        const int k = wd.word[static_cast<size_t>(r - 1)];
        const int u = lv.wire_at[static_cast<size_t>(k)];
        const int v = lv.wire_at[static_cast<size_t>(k) + 1];
        const bool same = orientation.forward[static_cast<size_t>(u - 1)] ==
                          orientation.forward[static_cast<size_t>(v - 1)];
        // respecting orientations: equal bits flow straight through
        // (horizontal smoothing), opposite bits cap off left and right
        const bool horizontal = (mode == SmoothingMode::respect) ? same : !same;
        if (horizontal) {
            uf.unite(node(r - 1, k), node(r, k));
            uf.unite(node(r - 1, k + 1), node(r, k + 1));
        } else {
            uf.unite(node(r - 1, k), node(r - 1, k + 1));
            uf.unite(node(r, k), node(r, k + 1));
        }
        for (int l = 1; l <= n; ++l)
            if (l != k && l != k + 1)
                uf.unite(node(r - 1, l), node(r, l));
        lv.swap_at(k);
    }
    // projective closure: right-edge level l meets left-edge level n+1-l
    for (int l = 1; l <= n; ++l)
        uf.unite(node(m, l), node(0, n + 1 - l));

    std::vector<int> glue_count(static_cast<size_t>((m + 1) * n), 0);
    for (int l = 1; l <= n; ++l)
        ++glue_count[static_cast<size_t>(uf.find(node(m, l)))];

    std::vector<bool> seen(static_cast<size_t>((m + 1) * n), false);
    CurveReport report;
    report.mode = mode == SmoothingMode::respect ? "respect" : "oppose";
    for (int id = 0; id < (m + 1) * n; ++id) {
        const int root = uf.find(id);
        if (seen[static_cast<size_t>(root)])
            continue;
        seen[static_cast<size_t>(root)] = true;
        ++report.curves;
        if (glue_count[static_cast<size_t>(root)] % 2 != 0)
            ++report.one_sided;
    }
    return report;
}

DualizeResult dualize(const Configuration& cfg, std::uint64_t seed, int retries) {
    if (cfg.dim != 2)
        throw OrchardError(ErrorCode::input, "dualize needs a plane configuration");
    require_generic(cfg);
    const int n = cfg.size();
    Rng rng(seed);
    for (int attempt = 0; attempt <= retries; ++attempt) {
        // rotation-like map (a,b) -> (a - s b, s a + b); attempt 0 keeps
        // the input as is
        const Rat s = attempt == 0 ? Rat(0) : make_rat(rng.uniform(-997, 997), rng.uniform(1, 499));
        std::vector<Rat> slope(static_cast<size_t>(n));
        std::vector<Rat> offset(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) {
            const Point& p = cfg.point(i);
            slope[static_cast<size_t>(i - 1)] = p[0] - s * p[1];
            offset[static_cast<size_t>(i - 1)] = s * p[0] + p[1];
        }
        std::vector<Rat> sorted_slopes = slope;
        std::sort(sorted_slopes.begin(), sorted_slopes.end());
        if (std::adjacent_find(sorted_slopes.begin(), sorted_slopes.end()) != sorted_slopes.end())
            continue;

        // dual lines y = slope x - offset; level 1 (bottom at x -> -inf)
        // belongs to the steepest line
        std::vector<int> order(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 1);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return slope[static_cast<size_t>(a - 1)] > slope[static_cast<size_t>(b - 1)];
        });
        std::vector<int> wire_of_point(static_cast<size_t>(n));
        for (int level = 1; level <= n; ++level)
            wire_of_point[static_cast<size_t>(order[static_cast<size_t>(level - 1)] - 1)] = level;

        struct Event {
            Rat x;
            int p, q; // point labels
        };
        std::vector<Event> events;
        events.reserve(static_cast<size_t>(binom(n, 2)));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const Rat dx = slope[static_cast<size_t>(i - 1)] - slope[static_cast<size_t>(j - 1)];
                events.push_back(
                    {Rat((offset[static_cast<size_t>(i - 1)] - offset[static_cast<size_t>(j - 1)]) / dx),
                     i, j});
            }
        std::stable_sort(events.begin(), events.end(),
                         [](const Event& a, const Event& b) { return a.x < b.x; });

        WiringDiagram wd;
        wd.n = n;
        std::vector<int> level_of(static_cast<size_t>(n) + 1);
        std::vector<int> wire_at(static_cast<size_t>(n) + 1);
        for (int i = 1; i <= n; ++i) {
            level_of[static_cast<size_t>(i)] = wire_of_point[static_cast<size_t>(i - 1)];
            wire_at[static_cast<size_t>(wire_of_point[static_cast<size_t>(i - 1)])] = i;
        }
        size_t e = 0;
        bool ok = true;
        while (e < events.size() && ok) {
            size_t g = e;
            while (g < events.size() && events[g].x == events[e].x)
                ++g;
            // equal-abscissa crossings are level-disjoint (no shared wire
            // for generic input); process them bottom-up
            std::vector<size_t> group(g - e);
            std::iota(group.begin(), group.end(), e);
            std::sort(group.begin(), group.end(), [&](size_t a, size_t b) {
                const int la = std::min(level_of[static_cast<size_t>(events[a].p)],
                                        level_of[static_cast<size_t>(events[a].q)]);
                const int lb = std::min(level_of[static_cast<size_t>(events[b].p)],
                                        level_of[static_cast<size_t>(events[b].q)]);
                return la < lb;
            });
            for (size_t idx : group) {
                const int lp = level_of[static_cast<size_t>(events[idx].p)];
                const int lq = level_of[static_cast<size_t>(events[idx].q)];
                if (std::abs(lp - lq) != 1) {
                    ok = false; // degenerate sweep state; retry with a new rotation
                    break;
                }
                const int k = std::min(lp, lq);
                wd.word.push_back(k);
                const int u = wire_at[static_cast<size_t>(k)];
                const int v = wire_at[static_cast<size_t>(k) + 1];
                std::swap(wire_at[static_cast<size_t>(k)], wire_at[static_cast<size_t>(k) + 1]);
                std::swap(level_of[static_cast<size_t>(u)], level_of[static_cast<size_t>(v)]);
            }
            e = g;
        }
        if (!ok)
            continue;
        validate_diagram(wd);
        return DualizeResult{std::move(wd), std::move(wire_of_point), s};
    }
    throw OrchardError(ErrorCode::retry_exhausted,
                       "no rotation produced a sweepable dual arrangement within the retry budget");
}

WiringDiagram random_wiring(int n, Rng& rng) {
    if (n < 1)
        throw OrchardError(ErrorCode::input, "random_wiring needs n >= 1");
    WiringDiagram wd;
    wd.n = n;
    Levels lv(n);
    std::vector<std::vector<bool>> crossed(static_cast<size_t>(n) + 1,
                                           std::vector<bool>(static_cast<size_t>(n) + 1, false));
    const size_t total = static_cast<size_t>(binom(n, 2));
    while (wd.word.size() < total) {
        std::vector<int> valid;
        for (int k = 1; k <= n - 1; ++k) {
            const int u = lv.wire_at[static_cast<size_t>(k)];
            const int v = lv.wire_at[static_cast<size_t>(k) + 1];
            if (!crossed[static_cast<size_t>(u)][static_cast<size_t>(v)])
                valid.push_back(k);
        }
        if (valid.empty())
            throw_internal("random wiring walk stuck before completing all crossings");
        const int k = valid[rng.index(valid.size())];
        const int u = lv.wire_at[static_cast<size_t>(k)];
        const int v = lv.wire_at[static_cast<size_t>(k) + 1];
        crossed[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
        crossed[static_cast<size_t>(v)][static_cast<size_t>(u)] = true;
        wd.word.push_back(k);
        lv.swap_at(k);
    }
    return wd;
}

} // namespace orchard
