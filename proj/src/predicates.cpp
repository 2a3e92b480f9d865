#include "orchard/predicates.hpp"

#include <algorithm>

#include "orchard/combinatorics.hpp"
#include "orchard/error.hpp"

namespace orchard {

Sign sign_of(const Rat& value) {
    return from_int(sgn(value));
}

namespace {

// Integer determinant by fraction-free Bareiss elimination. Mutates m.
Int bareiss(std::vector<std::vector<Int>>& m) {
    const size_t n = m.size();
    if (n == 0)
        return 1;
    Int prev = 1;
    int swap_sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0)
                ++pivot;
            if (pivot == n)
                return 0;
            std::swap(m[k], m[pivot]);
            swap_sign = -swap_sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return swap_sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

// Clears denominators row-wise; returns the integer matrix and the (positive)
// product of the row scales.
std::pair<std::vector<std::vector<Int>>, Int>
clear_denominators(const std::vector<std::vector<Rat>>& rows) {
    std::vector<std::vector<Int>> m(rows.size());
    Int scale = 1;
    for (size_t i = 0; i < rows.size(); ++i) {
        Int l = 1;
        for (const auto& v : rows[i])
            l = lcm(l, v.get_den());
        m[i].resize(rows[i].size());
        for (size_t j = 0; j < rows[i].size(); ++j)
            m[i][j] = rows[i][j].get_num() * (l / rows[i][j].get_den());
        scale *= l;
    }
    return {std::move(m), std::move(scale)};
}

} // namespace

Rat det_value(const std::vector<std::vector<Rat>>& rows) {
    for (const auto& r : rows)
        if (r.size() != rows.size())
            throw OrchardError(ErrorCode::input, "determinant of non-square matrix");
    auto [m, scale] = clear_denominators(rows);
    Int d = bareiss(m);
    return make_rat(d, scale);
}

Sign det_sign_matrix(const std::vector<std::vector<Rat>>& rows) {
    for (const auto& r : rows)
        if (r.size() != rows.size())
            throw OrchardError(ErrorCode::input, "determinant of non-square matrix");
    auto [m, scale] = clear_denominators(rows);
    (void)scale; // positive, does not affect the sign
    return from_int(sgn(bareiss(m)));
}

Sign det_sign(const std::vector<Point>& s, const Point& x) {
    const size_t d = x.size();
    if (s.size() != d)
        throw OrchardError(ErrorCode::input, "det_sign needs exactly dim points in S");
    std::vector<std::vector<Rat>> rows(d, std::vector<Rat>(d));
    for (size_t i = 0; i < d; ++i) {
        if (s[i].size() != d)
            throw OrchardError(ErrorCode::input, "det_sign dimension mismatch");
        for (size_t j = 0; j < d; ++j)
            rows[i][j] = s[i][j] - x[j];
    }
    return det_sign_matrix(rows);
}

Sign simplex_sign(const Configuration& cfg, const std::vector<int>& tuple) {
    std::vector<Point> s;
    s.reserve(tuple.size() - 1);
    for (size_t k = 1; k < tuple.size(); ++k)
        s.push_back(cfg.point(tuple[k]));
    return det_sign(s, cfg.point(tuple[0]));
}

std::vector<Rat> hyperplane_normal(const std::vector<Point>& pts, unsigned long* minor_counter) {
    const size_t d = pts.empty() ? 1 : pts[0].size();
    if (pts.size() != d)
        throw OrchardError(ErrorCode::input, "hyperplane needs exactly dim spanning points");
    // rows of the (d-1) x d difference matrix
    std::vector<std::vector<Rat>> diff(d - 1, std::vector<Rat>(d));
    for (size_t i = 0; i + 1 < d; ++i)
        for (size_t j = 0; j < d; ++j)
            diff[i][j] = pts[i + 1][j] - pts[0][j];
    std::vector<Rat> normal(d);
    for (size_t drop = 0; drop < d; ++drop) {
        std::vector<std::vector<Rat>> minor(d - 1, std::vector<Rat>(d - 1));
        for (size_t i = 0; i + 1 < d; ++i) {
            size_t c = 0;
            for (size_t j = 0; j < d; ++j) {
                if (j == drop)
                    continue;
                minor[i][c++] = diff[i][j];
            }
        }
        Rat m = det_value(minor);
        normal[drop] = (drop % 2 == 0) ? m : Rat(-m);
        if (minor_counter)
            ++*minor_counter;
    }
    return normal;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat r = 0;
    for (size_t i = 0; i < a.size(); ++i)
        r += a[i] * b[i];
    return r;
}

namespace {

// Affine rank test for the whole set (used when n <= d+1).
bool affinely_independent(const Configuration& cfg) {
    const int n = cfg.size();
    if (n <= 1)
        return true;
    std::vector<std::vector<Rat>> rows;
    rows.reserve(static_cast<size_t>(n - 1));
    for (int i = 2; i <= n; ++i) {
        std::vector<Rat> row(static_cast<size_t>(cfg.dim));
        for (int j = 0; j < cfg.dim; ++j)
            row[static_cast<size_t>(j)] = cfg.point(i)[static_cast<size_t>(j)] - cfg.point(1)[static_cast<size_t>(j)];
        rows.push_back(std::move(row));
    }
    // exact Gaussian rank over Q
    size_t rank = 0;
    const size_t cols = static_cast<size_t>(cfg.dim);
    for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0)
                continue;
            Rat f = rows[i][c] / rows[rank][c];
            for (size_t j = c; j < cols; ++j)
                rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank == rows.size();
}

} // namespace

std::optional<std::vector<int>> genericity_violation(const Configuration& cfg) {
    const int n = cfg.size();
    const int d = cfg.dim;
    for (const auto& p : cfg.points)
        if (static_cast<int>(p.size()) != d)
            throw OrchardError(ErrorCode::input, "point dimension mismatch");
    if (n <= d + 1) {
        if (affinely_independent(cfg))
            return std::nullopt;
        std::vector<int> all(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            all[static_cast<size_t>(i)] = i + 1;
        return all;
    }
    std::optional<std::vector<int>> hit;
    for_each_subset(n, d + 1, [&](const std::vector<int>& tuple) {
        if (hit)
            return;
        if (simplex_sign(cfg, tuple) == Sign::zero)
            hit = tuple;
    });
    return hit;
}

bool is_generic(const Configuration& cfg) {
    return !genericity_violation(cfg).has_value();
}

void require_generic(const Configuration& cfg) {
    auto bad = genericity_violation(cfg);
    if (bad)
        throw OrchardError(ErrorCode::not_generic, "configuration is not generic",
                           nlohmann::json{{"subset", *bad}});
}

long Chirotope::rank(const std::vector<int>& sorted_tuple) const {
    // combinatorial number system on 0-based ids
    long r = 0;
    for (size_t k = 0; k < sorted_tuple.size(); ++k)
        r += static_cast<long>(binom(sorted_tuple[k] - 1, static_cast<long>(k) + 1));
    return r;
}

Sign Chirotope::at(const std::vector<int>& sorted_tuple) const {
    if (static_cast<int>(sorted_tuple.size()) != dim_ + 1)
        throw OrchardError(ErrorCode::input, "chirotope tuple must have dim+1 labels");
    return entries_[static_cast<size_t>(rank(sorted_tuple))];
}

std::vector<std::vector<int>> Chirotope::diff(const Chirotope& other) const {
    if (dim_ != other.dim_ || n_ != other.n_)
        throw OrchardError(ErrorCode::input, "chirotope size mismatch");
    std::vector<std::vector<int>> out;
    for_each_subset(n_, dim_ + 1, [&](const std::vector<int>& tuple) {
        if (at(tuple) != other.at(tuple))
            out.push_back(tuple);
    });
    return out;
}

Chirotope chirotope(const Configuration& cfg) {
    require_generic(cfg);
    // entries are stored at their combinatorial (colex) rank
    std::vector<Sign> entries(static_cast<size_t>(binom(cfg.size(), cfg.dim + 1)), Sign::zero);
    for_each_subset(cfg.size(), cfg.dim + 1, [&](const std::vector<int>& tuple) {
        Sign s = simplex_sign(cfg, tuple);
        if (s == Sign::zero)
            throw_internal("zero chirotope entry on generic input");
        long r = 0;
        for (size_t k = 0; k < tuple.size(); ++k)
            r += static_cast<long>(binom(tuple[k] - 1, static_cast<long>(k) + 1));
        entries[static_cast<size_t>(r)] = s;
    });
    return Chirotope(cfg.dim, cfg.size(), std::move(entries));
}

bool same_isomorphism_type(const Configuration& a, const Configuration& b,
                           const std::vector<int>& bijection) {
    if (a.dim != b.dim || a.size() != b.size())
        throw OrchardError(ErrorCode::input, "configurations differ in size or dimension");
    if (static_cast<int>(bijection.size()) != a.size())
        throw OrchardError(ErrorCode::input, "bijection must map every label");
    const Chirotope ca = chirotope(a);
    const Chirotope cb = chirotope(b);
    bool same = true;
    for_each_subset(a.size(), a.dim + 1, [&](const std::vector<int>& tuple) {
        if (!same)
            return;
        std::vector<int> image(tuple.size());
        for (size_t k = 0; k < tuple.size(); ++k)
            image[k] = bijection[static_cast<size_t>(tuple[k] - 1)];
        const int parity = sort_parity(image);
        std::sort(image.begin(), image.end());
        const Sign expected = parity > 0 ? cb.at(image) : -cb.at(image);
        if (ca.at(tuple) != expected)
            same = false;
    });
    return same;
}

} // namespace orchard
