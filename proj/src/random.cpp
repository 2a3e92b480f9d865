#include "orchard/random.hpp"

#include "orchard/combinatorics.hpp"
#include "orchard/error.hpp"
#include "orchard/predicates.hpp"

namespace orchard {

long Rng::uniform(long lo, long hi) {
    if (lo > hi)
        throw OrchardError(ErrorCode::input, "empty uniform range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) // full 64-bit range
        return static_cast<long>(eng_());
    const std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % span + 1) % span;
    std::uint64_t draw;
    do {
        draw = eng_();
    } while (draw > limit);
    return lo + static_cast<long>(draw % span);
}

namespace {

Point random_point(Rng& rng, int d, long bound) {
    Point p(static_cast<size_t>(d));
    for (auto& c : p)
        c = Rat(rng.uniform(-bound, bound));
    return p;
}

// Does adding the last point keep the prefix generic? Earlier points are
// assumed generic already, so only subsets containing the new point matter.
bool last_point_ok(const Configuration& prefix) {
    const int m = prefix.size();
    const int d = prefix.dim;
    if (m <= d + 1)
        return is_generic(prefix);
    bool ok = true;
    std::vector<int> pool(static_cast<size_t>(m - 1));
    for (int i = 0; i < m - 1; ++i)
        pool[static_cast<size_t>(i)] = i + 1;
    for_each_subset_of(pool, d, [&](const std::vector<int>& subset) {
        if (!ok)
            return;
        std::vector<Point> s;
        s.reserve(subset.size());
        for (int label : subset)
            s.push_back(prefix.point(label));
        if (det_sign(s, prefix.point(m)) == Sign::zero)
            ok = false;
    });
    return ok;
}

} // namespace

Configuration random_generic(int n, int d, std::uint64_t seed, long coord_bound, int retries) {
    if (n < 1 || d < 1)
        throw OrchardError(ErrorCode::input, "random_generic needs n >= 1 and d >= 1");
    if (coord_bound < 1)
        throw OrchardError(ErrorCode::input, "coord_bound must be positive");
    Rng rng(seed);
    Configuration cfg;
    cfg.dim = d;
    int budget = retries;
    while (cfg.size() < n) {
        cfg.points.push_back(random_point(rng, d, coord_bound));
        if (last_point_ok(cfg))
            continue;
        cfg.points.pop_back();
        if (--budget < 0)
            throw OrchardError(ErrorCode::retry_exhausted,
                               "could not sample a generic configuration; coord_bound too small "
                               "for n=" + std::to_string(n) + ", d=" + std::to_string(d));
    }
    return cfg;
}

Configuration perturb_generic(const Configuration& cfg, std::uint64_t seed, int retries) {
    Rng rng(seed);
    const Rat eps = make_rat(Int(1), Int(1) << 40);
    const long amp = 1L << 20;
    for (int attempt = 0; attempt <= retries; ++attempt) {
        Configuration out = cfg;
        for (auto& p : out.points)
            for (auto& c : p)
                c += eps * Rat(rng.uniform(-amp, amp));
        if (is_generic(out))
            return out;
    }
    throw OrchardError(ErrorCode::retry_exhausted, "perturbation failed to reach a generic configuration");
}

} // namespace orchard
