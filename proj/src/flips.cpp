#include "orchard/flips.hpp"

#include <algorithm>

#include "orchard/combinatorics.hpp"
#include "orchard/error.hpp"

namespace orchard {

namespace {

void check_spec(const Configuration& cfg, const FlipSpec& spec) {
    if (static_cast<int>(spec.flipset.size()) != cfg.dim + 1)
        throw OrchardError(ErrorCode::input, "flipset must have dim+1 labels");
    if (!std::is_sorted(spec.flipset.begin(), spec.flipset.end()))
        throw OrchardError(ErrorCode::input, "flipset labels must be sorted");
    for (size_t k = 0; k + 1 < spec.flipset.size(); ++k)
        if (spec.flipset[k] == spec.flipset[k + 1])
            throw OrchardError(ErrorCode::input, "flipset labels must be distinct");
    for (int label : spec.flipset)
        if (label < 1 || label > cfg.size())
            throw OrchardError(ErrorCode::input, "flipset label out of range");
    if (!std::binary_search(spec.flipset.begin(), spec.flipset.end(), spec.mover))
        throw OrchardError(ErrorCode::input, "mover must belong to the flipset");
}

Point point_at(const Point& start, const std::vector<Rat>& dir, const Rat& t) {
    Point p(start.size());
    for (size_t c = 0; c < start.size(); ++c)
        p[c] = start[c] + t * dir[c];
    return p;
}

// det(S - P(t)) is affine in t; evaluate at t=0 and t=1 to get its root.
std::optional<Rat> wall_crossing(const std::vector<Point>& s, const Point& start,
                                 const std::vector<Rat>& dir) {
    const size_t d = start.size();
    std::vector<std::vector<Rat>> rows0(d, std::vector<Rat>(d));
    std::vector<std::vector<Rat>> rows1(d, std::vector<Rat>(d));
    const Point at1 = point_at(start, dir, Rat(1));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            rows0[i][j] = s[i][j] - start[j];
            rows1[i][j] = s[i][j] - at1[j];
        }
    const Rat d0 = det_value(rows0);
    const Rat slope = det_value(rows1) - d0;
    if (slope == 0)
        return std::nullopt;
    return Rat(-d0 / slope);
}

// Cheapest dyadic point near target whose side of every wall (d-subsets of
// the non-mover points) matches target's exactly. Falls back to the exact
// target if the precision budget runs out.
Point snap_in_cell(const Configuration& cfg, int mover, const Point& target) {
    std::vector<int> pool;
    for (int k = 1; k <= cfg.size(); ++k)
        if (k != mover)
            pool.push_back(k);
    std::vector<std::vector<Point>> walls;
    for_each_subset_of(pool, cfg.dim, [&](const std::vector<int>& subset) {
        std::vector<Point> s;
        s.reserve(subset.size());
        for (int label : subset)
            s.push_back(cfg.point(label));
        walls.push_back(std::move(s));
    });
    std::vector<Sign> want;
    want.reserve(walls.size());
    for (const auto& s : walls)
        want.push_back(det_sign(s, target));
    Int denom = 1;
    for (int bits = 0; bits <= 96; ++bits, denom *= 2) {
        Point candidate(target.size());
        for (size_t c = 0; c < target.size(); ++c) {
            Rat scaled = target[c] * Rat(denom) + Rat(1, 2);
            Int rounded;
            mpz_fdiv_q(rounded.get_mpz_t(), scaled.get_num().get_mpz_t(),
                       scaled.get_den().get_mpz_t());
            candidate[c] = make_rat(rounded, denom);
        }
        bool ok = true;
        for (size_t w = 0; w < walls.size() && ok; ++w)
            ok = det_sign(walls[w], candidate) == want[w];
        if (ok)
            return candidate;
    }
    return target;
}

} // namespace

FlipResult apply_flip(const Configuration& cfg, const FlipSpec& spec) {
    require_generic(cfg);
    check_spec(cfg, spec);
    const int d = cfg.dim;
    const Point& mover_pos = cfg.point(spec.mover);

    std::vector<Point> flip_wall;
    for (int label : spec.flipset)
        if (label != spec.mover)
            flip_wall.push_back(cfg.point(label));

    // direction = 2 (proj_H(P) - P), computed from the wall normal
    const std::vector<Rat> normal = hyperplane_normal(flip_wall);
    Point rel(mover_pos.size());
    for (size_t c = 0; c < rel.size(); ++c)
        rel[c] = mover_pos[c] - flip_wall[0][c];
    const Rat offset = dot(normal, rel);
    if (offset == 0)
        throw_internal("mover on its own flip hyperplane in a generic configuration");
    const Rat factor = Rat(-2) * offset / dot(normal, normal);
    std::vector<Rat> dir(normal.size());
    for (size_t c = 0; c < dir.size(); ++c)
        dir[c] = factor * normal[c];

    // every wall spanned by d non-mover points
    std::vector<int> pool;
    for (int k = 1; k <= cfg.size(); ++k)
        if (k != spec.mover)
            pool.push_back(k);
    std::vector<int> flip_wall_labels;
    for (int label : spec.flipset)
        if (label != spec.mover)
            flip_wall_labels.push_back(label);

    const Rat half(1, 2);
    std::optional<Rat> next_crossing;
    bool realizable = true;
    for_each_subset_of(pool, d, [&](const std::vector<int>& subset) {
        if (!realizable)
            return;
        std::vector<Point> s;
        s.reserve(subset.size());
        for (int label : subset)
            s.push_back(cfg.point(label));
        const auto t = wall_crossing(s, mover_pos, dir);
        if (subset == flip_wall_labels) {
            if (!t || *t != half)
                throw_internal("flip hyperplane not crossed at the segment midpoint");
            return;
        }
        if (!t)
            return;
        if (*t > 0 && *t <= half) {
            realizable = false; // another wall sits between the mover and H
            return;
        }
        if (*t > half && (!next_crossing || *t < *next_crossing))
            next_crossing = *t;
    });
    if (!realizable)
        throw OrchardError(ErrorCode::input,
                           "flip not realizable: another spanned hyperplane lies between the "
                           "mover and the flip hyperplane",
                           nlohmann::json{{"flipset", spec.flipset}, {"mover", spec.mover}});

    const Rat stop = next_crossing ? Rat((half + *next_crossing) / 2) : Rat(1);

    FlipResult result;
    result.before = cfg;
    result.spec = spec;
    result.stop_parameter = stop;
    result.after = cfg;
    result.after.point(spec.mover) = snap_in_cell(cfg, spec.mover, point_at(mover_pos, dir, stop));

    const auto changed = chirotope(result.before).diff(chirotope(result.after));
    if (changed.size() != 1 || changed.front() != spec.flipset)
        throw_internal("flip changed chirotope entries other than the flipset");
    return result;
}

std::optional<FlipResult> try_flip(const Configuration& cfg, const FlipSpec& spec) {
    try {
        return apply_flip(cfg, spec);
    } catch (const OrchardError& e) {
        if (e.code() == ErrorCode::input)
            return std::nullopt;
        throw;
    }
}

FlipResult random_realizable_flip(const Configuration& cfg, Rng& rng, int retries) {
    const int n = cfg.size();
    const int d = cfg.dim;
    if (n < d + 1)
        throw OrchardError(ErrorCode::input, "configuration too small for any flip");
    for (int attempt = 0; attempt < retries; ++attempt) {
        std::vector<int> labels(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            labels[static_cast<size_t>(i)] = i + 1;
        FlipSpec spec;
        for (int k = 0; k < d + 1; ++k) {
            const size_t pick = rng.index(labels.size());
            spec.flipset.push_back(labels[pick]);
            labels.erase(labels.begin() + static_cast<long>(pick));
        }
        std::sort(spec.flipset.begin(), spec.flipset.end());
        spec.mover = spec.flipset[rng.index(spec.flipset.size())];
        if (auto res = try_flip(cfg, spec))
            return std::move(*res);
    }
    throw OrchardError(ErrorCode::retry_exhausted, "no realizable flip found within the retry budget");
}

FlipCheckReport verify_flip_proposition(const FlipResult& result) {
    const OrchardPartition before =
        orchard_partition(result.before, PartitionMethod::anchor).partition;
    const OrchardPartition after =
        orchard_partition(result.after, PartitionMethod::anchor).partition;
    const int n = result.before.size();
    std::vector<bool> in_flipset(static_cast<size_t>(n) + 1, false);
    for (int label : result.spec.flipset)
        in_flipset[static_cast<size_t>(label)] = true;
    FlipCheckReport report;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            ++report.pairs_checked;
            const bool mixed = in_flipset[static_cast<size_t>(i)] != in_flipset[static_cast<size_t>(j)];
            const bool was = before.same_class(i, j);
            const bool now = after.same_class(i, j);
            const bool expected = mixed ? !was : was;
            if (now != expected) {
                report.pass = false;
                if (!report.counterexample)
                    report.counterexample = {i, j};
            }
        }
    }
    return report;
}

FlipClass classify_flip(int dim, const OrchardPartition& before, const FlipSpec& spec) {
    FlipClass fc;
    const int n = static_cast<int>(before.class_a.size() + before.class_b.size());
    for (int label : spec.flipset) {
        if (label < 1 || label > n)
            throw OrchardError(ErrorCode::input, "flipset label out of range");
        if (before.in_a(label))
            ++fc.count_a;
        else
            ++fc.count_b;
    }
    fc.monochromatic = fc.count_a == 0 || fc.count_b == 0;
    fc.equivalence_eligible = dim % 2 == 1 && fc.count_a == fc.count_b;
    return fc;
}

namespace {

int pi_value(int n, int d) {
    const int m = n / 2;
    return binom_odd(n - 3, d - 1) ? m % 2 : 0;
}

} // namespace

ParityExperimentReport pointed_parity_experiment(int n, int d, int trials, int steps,
                                                 std::uint64_t seed) {
    if (n < 1 || d < 1 || trials < 1 || steps < 0)
        throw OrchardError(ErrorCode::input, "bad parity experiment parameters");
    ParityExperimentReport report;
    report.n = n;
    report.d = d;
    report.trials = trials;
    report.steps = steps;
    report.seed = seed;
    if (d % 2 == 0)
        report.law = "toggle";
    else if (n % 2 == 1)
        report.law = "constant";
    else {
        report.law = "fixed";
        report.pi_expected = pi_value(n, d);
    }

    const bool can_flip = n >= d + 1;
    for (int t = 0; t < trials; ++t) {
        ParityTrialRecord rec;
        rec.seed = seed + static_cast<std::uint64_t>(t) * 7919 + 1;
        Rng rng(rec.seed);
        Configuration cfg = random_generic(n, d, rec.seed, 50);
        OrchardPartition part = orchard_partition(cfg, PartitionMethod::anchor).partition;
        rec.initial_a = static_cast<int>(part.class_a.size());
        rec.initial_b = static_cast<int>(part.class_b.size());

        auto check_fixed = [&](const OrchardPartition& p) {
            if (report.law != "fixed")
                return true;
            return static_cast<int>(p.class_a.size()) % 2 == *report.pi_expected &&
                   static_cast<int>(p.class_b.size()) % 2 == *report.pi_expected;
        };
        if (!check_fixed(part))
            rec.pass = false;

        std::vector<int> selected = part.class_a; // pointed choice
        for (int s = 0; s < steps && can_flip && rec.pass; ++s) {
            const FlipResult flip = random_realizable_flip(cfg, rng);
            const int prev_parity = static_cast<int>(selected.size()) % 2;

            // the pointed class follows the flip: symmetric difference with
            // the flipset
            std::vector<int> tracked;
            std::set_symmetric_difference(selected.begin(), selected.end(),
                                          flip.spec.flipset.begin(), flip.spec.flipset.end(),
                                          std::back_inserter(tracked));
            cfg = flip.after;
            part = orchard_partition(cfg, PartitionMethod::anchor).partition;
            if (tracked != part.class_a && tracked != part.class_b) {
                rec.pass = false;
                break;
            }
            selected = std::move(tracked);

            WalkStepRecord step;
            step.flipset = flip.spec.flipset;
            step.mover = flip.spec.mover;
            step.selected_parity = static_cast<int>(selected.size()) % 2;
            rec.steps.push_back(step);

            if (report.law == "toggle" && step.selected_parity == prev_parity)
                rec.pass = false;
            if (report.law == "constant" && step.selected_parity != prev_parity)
                rec.pass = false;
            if (!check_fixed(part))
                rec.pass = false;
        }
        report.pass = report.pass && rec.pass;
        report.records.push_back(std::move(rec));
    }
    return report;
}

} // namespace orchard
