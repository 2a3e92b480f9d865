#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orchard/orchard.hpp"
#include "orchard/random.hpp"

namespace orchard {

/// Points of RP^d or antipodal pairs on S^d, given as one nonzero rational
/// representative vector in R^{d+1} each. All predicates are invariant
/// under positive rescaling, so representatives need not be normalized.
struct HomogeneousConfiguration {
    int dim = 0; // d of RP^d / S^d; vectors live in R^{d+1}
    bool spherical = false;
    std::vector<std::vector<Rat>> vectors;

    int size() const { return static_cast<int>(vectors.size()); }
    const std::vector<Rat>& vec(int label) const { return vectors[static_cast<size_t>(label - 1)]; }
};

// File format: line 1 "proj d n" or "sphere d n", then n lines of d+1
// rationals (one representative per point / antipodal pair).
HomogeneousConfiguration parse_hconfig(const std::string& text);
HomogeneousConfiguration read_hconfig(const std::string& path);
std::string format_hconfig(const HomogeneousConfiguration& hcfg);

/// Every min(k, d+1)-subset of representatives linearly independent.
bool h_generic(const HomogeneousConfiguration& hcfg);
std::optional<std::vector<int>> h_genericity_violation(const HomogeneousConfiguration& hcfg);
void require_h_generic(const HomogeneousConfiguration& hcfg);

/// Rational covector that vanishes on no point: its kernel is the erased
/// hyperplane (equator) of a chart.
struct Chart {
    std::vector<Rat> covector; // d+1 entries
};

bool chart_valid(const HomogeneousConfiguration& hcfg, const Chart& chart);
Chart random_chart(const HomogeneousConfiguration& hcfg, std::uint64_t seed,
                   int retries = kDefaultRetries);

/// Affine coordinates of v / <l, v> in a fixed rational frame of {l = 1}
/// (scale to <l,v> = 1, drop the first coordinate where l is nonzero).
/// The result is generic exactly when the input is.
Configuration project_to_chart(const HomogeneousConfiguration& hcfg, const Chart& chart);

/// Partition of the projective points, defined when C(n-2, d) is even; the
/// result does not depend on the chart. The seed only selects the chart.
OrchardPartition projective_orchard(const HomogeneousConfiguration& hcfg, std::uint64_t seed = 0,
                                    int retries = kDefaultRetries);
OrchardPartition projective_orchard_with_chart(const HomogeneousConfiguration& hcfg,
                                               const Chart& chart);

/// Two-class assignment of all 2n signed points +-P_i. The antipodal map
/// preserves both classes when C(n-2, d) is even and swaps them when odd.
struct SignedPartition {
    int n = 0;
    bool antipodal_equivalent = false; // -P_i ~ P_i
    std::vector<bool> plus_in_a;       // class of +v_i; -v_i follows the rule

    bool in_a(int signed_label) const;
    std::vector<int> class_a() const; // signed labels, +i / -i
    std::vector<int> class_b() const;

    bool operator==(const SignedPartition&) const = default;
};

SignedPartition spherical_orchard(const HomogeneousConfiguration& hcfg, std::uint64_t seed = 0,
                                  int retries = kDefaultRetries);
SignedPartition spherical_orchard_with_chart(const HomogeneousConfiguration& hcfg,
                                             const Chart& chart);

/// Edge of the complete graph drawn along the component of the line
/// P_i P_j minus its endpoints that holds gamma ≡ C(n-3, d-1) (mod 2)
/// spanned-subspace crossings. Defined when C(n-2, d) is odd. The homology
/// class is measured against the chart's hyperplane at infinity; only
/// cycle sums are chart-invariant.
struct GammaEdge {
    int i = 0;
    int j = 0;
    long count = 0;        // crossings in the chosen component
    bool bounded = false;  // chosen component is the affine segment
    int homology_class = 0; // 0 bounded, 1 through infinity
};

std::vector<GammaEdge> gamma_graph(const HomogeneousConfiguration& hcfg, std::uint64_t seed = 0,
                                   int retries = kDefaultRetries);
std::vector<GammaEdge> gamma_graph_with_chart(const HomogeneousConfiguration& hcfg,
                                              const Chart& chart);

struct TriangleReport {
    bool pass = true;
    long triangles_checked = 0;
    std::optional<std::vector<int>> witness; // first odd triangle
};

/// All C(n,3) triangle cycles of the gamma graph must be homologically
/// trivial (even edge-class sum); triangles generate the cycle space.
TriangleReport verify_homological_triviality(const HomogeneousConfiguration& hcfg,
                                             std::uint64_t seed = 0,
                                             int retries = kDefaultRetries);

/// Random generic homogeneous configuration (integer representatives).
HomogeneousConfiguration random_hconfig(int n, int d, bool spherical, std::uint64_t seed,
                                        long coord_bound = 50, int retries = kDefaultRetries);

} // namespace orchard
