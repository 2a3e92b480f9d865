#include "orchard/homogeneous.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "orchard/combinatorics.hpp"
#include "orchard/error.hpp"

namespace orchard {

namespace {

std::vector<std::string> tokens_of(const std::string& text) {
    std::vector<std::string> tokens;
    std::istringstream lines(text);
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
    return tokens;
}

} // namespace

HomogeneousConfiguration parse_hconfig(const std::string& text) {
    const auto tokens = tokens_of(text);
    if (tokens.size() < 3)
        throw OrchardError(ErrorCode::input, "homogeneous header 'proj|sphere d n' missing");
    HomogeneousConfiguration hcfg;
    if (tokens[0] == "proj")
        hcfg.spherical = false;
    else if (tokens[0] == "sphere")
        hcfg.spherical = true;
    else
        throw OrchardError(ErrorCode::input, "homogeneous mode must be 'proj' or 'sphere'");
    const int d = std::stoi(tokens[1]);
    const int n = std::stoi(tokens[2]);
    if (d < 1 || n < 0)
        throw OrchardError(ErrorCode::input, "bad d or n in homogeneous configuration");
    hcfg.dim = d;
    if (tokens.size() != 3 + static_cast<size_t>(n) * static_cast<size_t>(d + 1))
        throw OrchardError(ErrorCode::input, "wrong number of coordinates in homogeneous configuration");
    hcfg.vectors.resize(static_cast<size_t>(n));
    size_t t = 3;
    for (auto& v : hcfg.vectors) {
        v.resize(static_cast<size_t>(d) + 1);
        bool nonzero = false;
        for (auto& c : v) {
            c = parse_rat(tokens[t++]);
            nonzero = nonzero || c != 0;
        }
        if (!nonzero)
            throw OrchardError(ErrorCode::input, "zero vector is not a projective point");
    }
    return hcfg;
}

HomogeneousConfiguration read_hconfig(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw OrchardError(ErrorCode::io, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_hconfig(buf.str());
}

std::string format_hconfig(const HomogeneousConfiguration& hcfg) {
    std::string out = std::string(hcfg.spherical ? "sphere" : "proj") + " " +
                      std::to_string(hcfg.dim) + " " + std::to_string(hcfg.size()) + "\n";
    for (const auto& v : hcfg.vectors)
        out += format_point(v) + "\n";
    return out;
}

namespace {

// exact rank of the rows
size_t rational_rank(std::vector<std::vector<Rat>> rows) {
    size_t rank = 0;
    const size_t cols = rows.empty() ? 0 : rows[0].size();
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
    return rank;
}

} // namespace

std::optional<std::vector<int>> h_genericity_violation(const HomogeneousConfiguration& hcfg) {
    const int n = hcfg.size();
    const int d = hcfg.dim;
    for (const auto& v : hcfg.vectors)
        if (static_cast<int>(v.size()) != d + 1)
            throw OrchardError(ErrorCode::input, "representative dimension mismatch");
    if (n <= d + 1) {
        std::vector<std::vector<Rat>> rows(hcfg.vectors.begin(), hcfg.vectors.end());
        if (rational_rank(std::move(rows)) == static_cast<size_t>(n))
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
        std::vector<std::vector<Rat>> rows;
        rows.reserve(tuple.size());
        for (int label : tuple)
            rows.push_back(hcfg.vec(label));
        if (det_sign_matrix(rows) == Sign::zero)
            hit = tuple;
    });
    return hit;
}

bool h_generic(const HomogeneousConfiguration& hcfg) {
    return !h_genericity_violation(hcfg).has_value();
}

void require_h_generic(const HomogeneousConfiguration& hcfg) {
    auto bad = h_genericity_violation(hcfg);
    if (bad)
        throw OrchardError(ErrorCode::not_generic, "homogeneous configuration is not generic",
                           nlohmann::json{{"subset", *bad}});
}

bool chart_valid(const HomogeneousConfiguration& hcfg, const Chart& chart) {
    if (chart.covector.size() != static_cast<size_t>(hcfg.dim) + 1)
        return false;
    if (std::all_of(chart.covector.begin(), chart.covector.end(),
                    [](const Rat& c) { return c == 0; }))
        return false;
    for (const auto& v : hcfg.vectors)
        if (dot(chart.covector, v) == 0)
            return false;
    return true;
}

Chart random_chart(const HomogeneousConfiguration& hcfg, std::uint64_t seed, int retries) {
    Rng rng(seed);
    for (int attempt = 0; attempt <= retries; ++attempt) {
        Chart chart;
        chart.covector.resize(static_cast<size_t>(hcfg.dim) + 1);
        for (auto& c : chart.covector)
            c = Rat(rng.uniform(-50, 50));
        if (chart_valid(hcfg, chart))
            return chart;
    }
    throw OrchardError(ErrorCode::retry_exhausted, "no valid chart found within the retry budget");
}

Configuration project_to_chart(const HomogeneousConfiguration& hcfg, const Chart& chart) {
    require_h_generic(hcfg);
    if (!chart_valid(hcfg, chart))
        throw OrchardError(ErrorCode::input, "chart hyperplane touches a configuration point");
    size_t drop = 0;
    while (chart.covector[drop] == 0)
        ++drop;
    Configuration cfg;
    cfg.dim = hcfg.dim;
    cfg.points.reserve(hcfg.vectors.size());
    for (const auto& v : hcfg.vectors) {
        const Rat scale = dot(chart.covector, v);
        Point p;
        p.reserve(static_cast<size_t>(hcfg.dim));
        for (size_t c = 0; c < v.size(); ++c) {
            if (c == drop)
                continue;
            p.push_back(v[c] / scale);
        }
        cfg.points.push_back(std::move(p));
    }
    if (!is_generic(cfg))
        throw_internal("chart projection of a generic configuration is not generic");
    return cfg;
}

namespace {

void require_even_parity(const HomogeneousConfiguration& hcfg) {
    const long n = hcfg.size();
    const long d = hcfg.dim;
    if (binom(n - 2, d) % 2 != 0)
        throw OrchardError(
            ErrorCode::parity_unsupported,
            "C(n-2,d) is odd: the projective partition is undefined; the gamma graph "
            "carries the odd-parity structure",
            nlohmann::json{{"n", n}, {"d", d}, {"binomial", binom(n - 2, d)}});
}

void require_odd_parity(const HomogeneousConfiguration& hcfg) {
    const long n = hcfg.size();
    const long d = hcfg.dim;
    if (binom(n - 2, d) % 2 == 0)
        throw OrchardError(ErrorCode::parity_unsupported,
                           "C(n-2,d) is even: both line components have equal crossing parity "
                           "and no gamma component is selected",
                           nlohmann::json{{"n", n}, {"d", d}, {"binomial", binom(n - 2, d)}});
}

} // namespace

OrchardPartition projective_orchard_with_chart(const HomogeneousConfiguration& hcfg,
                                               const Chart& chart) {
    require_h_generic(hcfg);
    require_even_parity(hcfg);
    return orchard_partition(project_to_chart(hcfg, chart), PartitionMethod::anchor).partition;
}

OrchardPartition projective_orchard(const HomogeneousConfiguration& hcfg, std::uint64_t seed,
                                    int retries) {
    require_h_generic(hcfg);
    require_even_parity(hcfg);
    return projective_orchard_with_chart(hcfg, random_chart(hcfg, seed, retries));
}

bool SignedPartition::in_a(int signed_label) const {
    const int i = signed_label > 0 ? signed_label : -signed_label;
    const bool plus = plus_in_a[static_cast<size_t>(i - 1)];
    if (signed_label > 0)
        return plus;
    return antipodal_equivalent ? plus : !plus;
}

std::vector<int> SignedPartition::class_a() const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
        if (in_a(i))
            out.push_back(i);
        if (in_a(-i))
            out.push_back(-i);
    }
    return out;
}

std::vector<int> SignedPartition::class_b() const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
        if (!in_a(i))
            out.push_back(i);
        if (!in_a(-i))
            out.push_back(-i);
    }
    return out;
}

SignedPartition spherical_orchard_with_chart(const HomogeneousConfiguration& hcfg,
                                             const Chart& chart) {
    if (!hcfg.spherical)
        throw OrchardError(ErrorCode::input, "spherical partition needs a sphere-mode configuration");
    require_h_generic(hcfg);
    SignedPartition sp;
    sp.n = hcfg.size();
    sp.antipodal_equivalent = binom(hcfg.size() - 2, hcfg.dim) % 2 == 0;
    sp.plus_in_a.assign(static_cast<size_t>(hcfg.size()), false);

    if (sp.antipodal_equivalent) {
        const OrchardPartition part = projective_orchard_with_chart(hcfg, chart);
        for (int i = 1; i <= hcfg.size(); ++i)
            sp.plus_in_a[static_cast<size_t>(i - 1)] = part.in_a(i);
        return sp;
    }

    // odd case: normalize every representative to the chart's positive
    // hemisphere, partition the projection, and put -P_i opposite P_i
    HomogeneousConfiguration flipped = hcfg;
    std::vector<bool> negated(static_cast<size_t>(hcfg.size()), false);
    for (int i = 1; i <= hcfg.size(); ++i) {
        if (sign_of(dot(chart.covector, hcfg.vec(i))) == Sign::minus) {
            negated[static_cast<size_t>(i - 1)] = true;
            for (auto& c : flipped.vectors[static_cast<size_t>(i - 1)])
                c = -c;
        }
    }
    const OrchardPartition part =
        orchard_partition(project_to_chart(flipped, chart), PartitionMethod::anchor).partition;
    // the projected point i is the hemisphere representative; +v_i sits in
    // its class when it was not negated, in the opposite one when it was
    for (int i = 1; i <= hcfg.size(); ++i) {
        const bool hemisphere_in_a = part.in_a(i);
        sp.plus_in_a[static_cast<size_t>(i - 1)] =
            negated[static_cast<size_t>(i - 1)] ? !hemisphere_in_a : hemisphere_in_a;
    }
    // canonical: +v_1 in class A
    if (!sp.plus_in_a[0])
        sp.plus_in_a.flip();
    return sp;
}

SignedPartition spherical_orchard(const HomogeneousConfiguration& hcfg, std::uint64_t seed,
                                  int retries) {
    if (!hcfg.spherical)
        throw OrchardError(ErrorCode::input, "spherical partition needs a sphere-mode configuration");
    require_h_generic(hcfg);
    return spherical_orchard_with_chart(hcfg, random_chart(hcfg, seed, retries));
}

std::vector<GammaEdge> gamma_graph_with_chart(const HomogeneousConfiguration& hcfg,
                                              const Chart& chart) {
    require_h_generic(hcfg);
    require_odd_parity(hcfg);
    const Configuration cfg = project_to_chart(hcfg, chart);
    const int n = cfg.size();
    const long total = static_cast<long>(binom(n - 2, cfg.dim));
    const bool target = binom_odd(n - 3, cfg.dim - 1);
    std::vector<GammaEdge> edges;
    edges.reserve(static_cast<size_t>(binom(n, 2)));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            // a spanned hyperplane meets the affine segment (P_i, P_j) iff
            // it separates the endpoints in this chart; every other spanned
            // hyperplane meets the complementary component through infinity
            const long bounded = separating_count(cfg, i, j).count;
            const long unbounded = total - bounded;
            GammaEdge e;
            e.i = i;
            e.j = j;
            if ((bounded % 2 != 0) == target) {
                e.count = bounded;
                e.bounded = true;
                e.homology_class = 0;
            } else {
                e.count = unbounded;
                e.bounded = false;
                e.homology_class = 1;
            }
            edges.push_back(e);
        }
    }
    return edges;
}

std::vector<GammaEdge> gamma_graph(const HomogeneousConfiguration& hcfg, std::uint64_t seed,
                                   int retries) {
    require_h_generic(hcfg);
    require_odd_parity(hcfg);
    return gamma_graph_with_chart(hcfg, random_chart(hcfg, seed, retries));
}

TriangleReport verify_homological_triviality(const HomogeneousConfiguration& hcfg,
                                             std::uint64_t seed, int retries) {
    const auto edges = gamma_graph(hcfg, seed, retries);
    const int n = hcfg.size();
    std::vector<std::vector<int>> cls(static_cast<size_t>(n) + 1,
                                      std::vector<int>(static_cast<size_t>(n) + 1, 0));
    for (const auto& e : edges) {
        cls[static_cast<size_t>(e.i)][static_cast<size_t>(e.j)] = e.homology_class;
        cls[static_cast<size_t>(e.j)][static_cast<size_t>(e.i)] = e.homology_class;
    }
    TriangleReport report;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                ++report.triangles_checked;
                const int sum = cls[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                                cls[static_cast<size_t>(j)][static_cast<size_t>(k)] +
                                cls[static_cast<size_t>(i)][static_cast<size_t>(k)];
                if (sum % 2 != 0 && report.pass) {
                    report.pass = false;
                    report.witness = std::vector<int>{i, j, k};
                }
            }
    return report;
}

HomogeneousConfiguration random_hconfig(int n, int d, bool spherical, std::uint64_t seed,
                                        long coord_bound, int retries) {
    if (n < 1 || d < 1)
        throw OrchardError(ErrorCode::input, "random_hconfig needs n >= 1 and d >= 1");
    Rng rng(seed);
    HomogeneousConfiguration hcfg;
    hcfg.dim = d;
    hcfg.spherical = spherical;
    int budget = retries;
    while (hcfg.size() < n) {
        std::vector<Rat> v(static_cast<size_t>(d) + 1);
        bool nonzero = false;
        for (auto& c : v) {
            c = Rat(rng.uniform(-coord_bound, coord_bound));
            nonzero = nonzero || c != 0;
        }
        hcfg.vectors.push_back(std::move(v));
        if (nonzero && h_generic(hcfg))
            continue;
        hcfg.vectors.pop_back();
        if (--budget < 0)
            throw OrchardError(ErrorCode::retry_exhausted,
                               "could not sample a generic homogeneous configuration");
    }
    return hcfg;
}

} // namespace orchard
