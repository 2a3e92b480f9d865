#include "orchard/orchard.hpp"

#include <algorithm>

#include "orchard/combinatorics.hpp"
#include "orchard/error.hpp"

namespace orchard {

namespace {

std::vector<int> others(int n, int i, int j) {
    std::vector<int> pool;
    pool.reserve(static_cast<size_t>(n) - 2);
    for (int k = 1; k <= n; ++k)
        if (k != i && k != j)
            pool.push_back(k);
    return pool;
}

void check_pair(const Configuration& cfg, int i, int j) {
    if (i < 1 || i > cfg.size() || j < 1 || j > cfg.size())
        throw OrchardError(ErrorCode::input, "pair label out of range");
    if (i == j)
        throw OrchardError(ErrorCode::input, "pair labels must differ");
}

long separating_count_counted(const Configuration& cfg, int i, int j, unsigned long* tests) {
    long count = 0;
    for_each_subset_of(others(cfg.size(), i, j), cfg.dim, [&](const std::vector<int>& subset) {
        std::vector<Point> s;
        s.reserve(subset.size());
        for (int label : subset)
            s.push_back(cfg.point(label));
        if (tests)
            ++*tests;
        if (det_sign(s, cfg.point(i)) * det_sign(s, cfg.point(j)) == Sign::minus)
            ++count;
    });
    return count;
}

} // namespace

SeparationCount separating_count(const Configuration& cfg, int i, int j) {
    check_pair(cfg, i, j);
    require_generic(cfg);
    return SeparationCount{i, j, separating_count_counted(cfg, i, j, nullptr)};
}

bool orchard_related(const Configuration& cfg, int i, int j) {
    if (i == j) {
        if (i < 1 || i > cfg.size())
            throw OrchardError(ErrorCode::input, "label out of range");
        return true;
    }
    const SeparationCount sc = separating_count(cfg, i, j);
    return (sc.count % 2 != 0) == binom_odd(cfg.size() - 3, cfg.dim - 1);
}

bool sign_product_related(const Configuration& cfg, int i, int j) {
    check_pair(cfg, i, j);
    require_generic(cfg);
    int product = 1;
    for_each_subset_of(others(cfg.size(), i, j), cfg.dim, [&](const std::vector<int>& subset) {
        std::vector<Point> s;
        s.reserve(subset.size());
        for (int label : subset)
            s.push_back(cfg.point(label));
        product *= to_int(det_sign(s, cfg.point(i))) * to_int(det_sign(s, cfg.point(j)));
    });
    if (binom_odd(cfg.size() - 3, cfg.dim - 1))
        product = -product;
    return product > 0;
}

bool OrchardPartition::in_a(int label) const {
    return std::binary_search(class_a.begin(), class_a.end(), label);
}

bool OrchardPartition::same_class(int i, int j) const {
    return in_a(i) == in_a(j);
}

namespace {

OrchardPartition canonical_partition(int n, const std::vector<bool>& with_one) {
    OrchardPartition part;
    for (int k = 1; k <= n; ++k)
        (with_one[static_cast<size_t>(k - 1)] ? part.class_a : part.class_b).push_back(k);
    return part;
}

PartitionResult partition_all_pairs(const Configuration& cfg) {
    const int n = cfg.size();
    const bool target = binom_odd(n - 3, cfg.dim - 1);
    PartitionResult res;
    res.stats.method = PartitionMethod::all_pairs;
    res.pair_counts.assign(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
    std::vector<std::vector<bool>> rel(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), true));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const long c = separating_count_counted(cfg, i, j, &res.stats.predicate_count);
            res.pair_counts[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = c;
            res.pair_counts[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] = c;
            const bool related = (c % 2 != 0) == target;
            rel[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = related;
            rel[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] = related;
        }
    }
    // The relation must be a two-class equivalence; anything else is a bug.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (rel[static_cast<size_t>(i)][static_cast<size_t>(j)] &&
                    rel[static_cast<size_t>(j)][static_cast<size_t>(k)] &&
                    !rel[static_cast<size_t>(i)][static_cast<size_t>(k)])
                    throw_internal("orchard relation failed transitivity");
    std::vector<bool> with_one(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k)
        with_one[static_cast<size_t>(k - 1)] = rel[0][static_cast<size_t>(k - 1)];
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (!with_one[static_cast<size_t>(i - 1)] && !with_one[static_cast<size_t>(j - 1)] &&
                !rel[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)])
                throw_internal("orchard relation produced more than two classes");
    res.partition = canonical_partition(n, with_one);
    return res;
}

// Remark-style anchor: for every hyperplane spanned by d points of
// {P_2..P_n}, build an affine functional (d cofactor minors; counted) and
// accumulate the parity of n(P_1, P_i) from its sign at P_1 and P_i.
PartitionResult partition_anchor(const Configuration& cfg) {
    const int n = cfg.size();
    const int d = cfg.dim;
    PartitionResult res;
    res.stats.method = PartitionMethod::anchor;
    std::vector<int> parity(static_cast<size_t>(n) + 1, 0);
    std::vector<int> pool;
    for (int k = 2; k <= n; ++k)
        pool.push_back(k);
    for_each_subset_of(pool, d, [&](const std::vector<int>& span) {
        std::vector<Point> pts;
        pts.reserve(span.size());
        for (int label : span)
            pts.push_back(cfg.point(label));
        const std::vector<Rat> normal = hyperplane_normal(pts, &res.stats.predicate_count);
        const Rat c0 = -dot(normal, pts[0]);
        const Sign at_anchor = sign_of(dot(normal, cfg.point(1)) + c0);
        if (at_anchor == Sign::zero)
            throw_internal("anchor point on a spanned hyperplane of a generic configuration");
        std::vector<bool> in_span(static_cast<size_t>(n) + 1, false);
        for (int label : span)
            in_span[static_cast<size_t>(label)] = true;
        for (int i = 2; i <= n; ++i) {
            if (in_span[static_cast<size_t>(i)])
                continue;
            const Sign at_i = sign_of(dot(normal, cfg.point(i)) + c0);
            if (at_i == Sign::zero)
                throw_internal("query point on a spanned hyperplane of a generic configuration");
            if (at_i == -at_anchor)
                parity[static_cast<size_t>(i)] ^= 1;
        }
    });
    const bool target = binom_odd(n - 3, d - 1);
    std::vector<bool> with_one(static_cast<size_t>(n));
    with_one[0] = true;
    for (int i = 2; i <= n; ++i)
        with_one[static_cast<size_t>(i - 1)] = (parity[static_cast<size_t>(i)] != 0) == target;
    res.partition = canonical_partition(n, with_one);
    return res;
}

} // namespace

PartitionResult orchard_partition(const Configuration& cfg, PartitionMethod method) {
    require_generic(cfg);
    return method == PartitionMethod::all_pairs ? partition_all_pairs(cfg) : partition_anchor(cfg);
}

namespace {

OrchardTree build_tree(const Configuration& cfg, const std::vector<int>& labels) {
    OrchardTree node;
    node.set = labels;
    const OrchardPartition part = orchard_partition(cfg, PartitionMethod::anchor).partition;
    if (part.class_b.empty())
        return node;
    auto lift = [&](const std::vector<int>& relabeled) {
        std::vector<int> out;
        out.reserve(relabeled.size());
        for (int r : relabeled)
            out.push_back(labels[static_cast<size_t>(r - 1)]);
        return out;
    };
    const std::vector<int> left = lift(part.class_a);  // holds relabeled 1 = smallest label
    const std::vector<int> right = lift(part.class_b);
    node.children.push_back(std::make_unique<OrchardTree>(build_tree(cfg.induced(part.class_a), left)));
    node.children.push_back(std::make_unique<OrchardTree>(build_tree(cfg.induced(part.class_b), right)));
    return node;
}

} // namespace

OrchardTree orchard_tree(const Configuration& cfg) {
    require_generic(cfg);
    std::vector<int> all(static_cast<size_t>(cfg.size()));
    for (int i = 0; i < cfg.size(); ++i)
        all[static_cast<size_t>(i)] = i + 1;
    return build_tree(cfg, all);
}

namespace {

void canonicalize_signs(std::map<int, Sign>& value, ClassSigns& cls) {
    if (cls.well_defined || cls.members.empty())
        return;
    cls.canonicalized = true;
    const Sign lead = value.at(cls.members.front());
    if (lead == Sign::plus)
        return;
    for (int m : cls.members)
        value[m] = -value[m];
}

} // namespace

PhiResult phi_invariant(const Configuration& cfg, const OrchardPartition& partition) {
    require_generic(cfg);
    if (cfg.dim < 1)
        throw OrchardError(ErrorCode::input, "phi needs dimension >= 1");
    const int n = cfg.size();
    const int d = cfg.dim;
    PhiResult res;
    res.class_a.members = partition.class_a;
    res.class_b.members = partition.class_b;
    res.class_a.well_defined =
        !binom_odd(n - 2 - static_cast<long>(partition.class_a.size()), d - 2);
    res.class_b.well_defined =
        !binom_odd(n - 2 - static_cast<long>(partition.class_b.size()), d - 2);
    auto fill = [&](const std::vector<int>& members, const std::vector<int>& opposite) {
        for (int p : members) {
            int product = 1;
            for_each_subset_of(opposite, d, [&](const std::vector<int>& subset) {
                std::vector<Point> s;
                s.reserve(subset.size());
                for (int label : subset)
                    s.push_back(cfg.point(label));
                product *= to_int(det_sign(s, cfg.point(p)));
            });
            res.value[p] = from_int(product);
        }
    };
    fill(partition.class_a, partition.class_b);
    fill(partition.class_b, partition.class_a);
    canonicalize_signs(res.value, res.class_a);
    canonicalize_signs(res.value, res.class_b);
    return res;
}

OmegaResult omega_invariant(const Configuration& cfg, const OrchardPartition& partition) {
    require_generic(cfg);
    if (cfg.dim < 1)
        throw OrchardError(ErrorCode::input, "omega needs dimension >= 1");
    const int n = cfg.size();
    const int d = cfg.dim;
    OmegaResult res;
    res.class_a.members = partition.class_a;
    res.class_b.members = partition.class_b;
    res.class_a.well_defined =
        !binom_odd(n - 3 - static_cast<long>(partition.class_a.size()), d - 3);
    res.class_b.well_defined =
        !binom_odd(n - 3 - static_cast<long>(partition.class_b.size()), d - 3);
    auto fill = [&](const std::vector<int>& members, const std::vector<int>& opposite) {
        for (int p : members) {
            for (int q : members) {
                if (p == q)
                    continue;
                int product = 1;
                for_each_subset_of(opposite, d - 1, [&](const std::vector<int>& subset) {
                    std::vector<Point> s;
                    s.reserve(subset.size() + 1);
                    s.push_back(cfg.point(p));
                    for (int label : subset)
                        s.push_back(cfg.point(label));
                    product *= to_int(det_sign(s, cfg.point(q)));
                });
                res.value[{p, q}] = from_int(product);
            }
        }
    };
    fill(partition.class_a, partition.class_b);
    fill(partition.class_b, partition.class_a);

    auto canonicalize_pairs = [&](ClassSigns& cls) {
        if (cls.well_defined || cls.members.size() < 2)
            return;
        cls.canonicalized = true;
        const Sign lead = res.value.at({cls.members[0], cls.members[1]});
        if (lead == Sign::plus)
            return;
        for (int p : cls.members)
            for (int q : cls.members)
                if (p != q)
                    res.value[{p, q}] = -res.value[{p, q}];
    };
    canonicalize_pairs(res.class_a);
    canonicalize_pairs(res.class_b);

    auto antisym = [&](const std::vector<int>& members) {
        for (size_t a = 0; a < members.size(); ++a)
            for (size_t b = a + 1; b < members.size(); ++b)
                if (res.value.at({members[a], members[b]}) != -res.value.at({members[b], members[a]}))
                    return false;
        return true;
    };
    res.antisymmetric_a = antisym(partition.class_a);
    res.antisymmetric_b = antisym(partition.class_b);
    return res;
}

} // namespace orchard
