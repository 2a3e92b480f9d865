#pragma once

// Shared helpers for the test suites: independent oracles and small
// instance builders. Everything here stays deliberately naive; the point
// is to check the library against a second route, not to be fast.

#include <vector>

#include "orchard/config.hpp"
#include "orchard/instances.hpp"
#include "orchard/orchard.hpp"
#include "orchard/predicates.hpp"

namespace testsupport {

using orchard::Configuration;
using orchard::Point;
using orchard::Rat;

/// Cofactor-expansion determinant, O(n!). Oracle for the Bareiss route.
inline Rat naive_det(const std::vector<std::vector<Rat>>& m) {
    const size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    Rat total = 0;
    for (size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Rat>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<Rat> row;
            for (size_t cc = 0; cc < n; ++cc)
                if (cc != c)
                    row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        const Rat term = m[0][c] * naive_det(minor);
        total += (c % 2 == 0) ? term : Rat(-term);
    }
    return total;
}

/// Index-parity partition: the d=1 closed form.
inline orchard::OrchardPartition parity_partition(int n) {
    orchard::OrchardPartition part;
    for (int k = 1; k <= n; ++k)
        (k % 2 == 1 ? part.class_a : part.class_b).push_back(k);
    return part;
}

inline orchard::OrchardPartition trivial_partition(int n) {
    orchard::OrchardPartition part;
    for (int k = 1; k <= n; ++k)
        part.class_a.push_back(k);
    return part;
}

inline Configuration make_config(int dim, const std::vector<std::vector<long>>& coords) {
    Configuration cfg;
    cfg.dim = dim;
    for (const auto& row : coords) {
        Point p;
        for (long c : row)
            p.push_back(Rat(c));
        cfg.points.push_back(std::move(p));
    }
    return cfg;
}

/// Affine image q = A p + t. A positive-determinant default is provided.
inline Configuration apply_affine(const Configuration& cfg,
                                  const std::vector<std::vector<long>>& a,
                                  const std::vector<long>& t) {
    Configuration out;
    out.dim = cfg.dim;
    for (const auto& p : cfg.points) {
        Point q(p.size());
        for (size_t r = 0; r < p.size(); ++r) {
            Rat v(t[r]);
            for (size_t c = 0; c < p.size(); ++c)
                v += Rat(a[r][c]) * p[c];
            q[r] = v;
        }
        out.points.push_back(std::move(q));
    }
    return out;
}

} // namespace testsupport
