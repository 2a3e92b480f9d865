#pragma once

#include <string>
#include <vector>

#include "orchard/orchard.hpp"

namespace orchard {

/// Multivariate polynomial with rational coefficients over x1..xk.
struct Polynomial {
    struct Term {
        Rat coeff;
        std::vector<unsigned> exps; // one exponent per variable
    };
    int vars = 0;
    std::vector<Term> terms;

    Rat eval(const Point& p) const;
    bool vanishes_at_origin() const;
    std::string to_string() const;
};

/// Parses the documented grammar: terms of monomials with rational
/// coefficients in variables x1..xk, e.g. "x1^2 + 3/2*x1*x2 - x2".
Polynomial parse_polynomial(const std::string& text, int vars);

/// Basis b_1..b_d of the nonconstant part of a (d+1)-dimensional function
/// space containing the constants; every b_i vanishes at the origin.
struct FunctionFamily {
    std::string name;
    int source_dim = 0; // k
    int sep_dim = 0;    // d
    std::vector<Polynomial> basis;
};

FunctionFamily affine_family(int d);
FunctionFamily circles_family();                       // k=2, d=3: x, y, x^2+y^2
FunctionFamily conics_family();                        // k=2, d=5: x, y, x^2, xy, y^2
FunctionFamily interpolation_family(int d);            // k=2: x, ..., x^(d-1), y
FunctionFamily custom_family(int k, std::vector<Polynomial> basis);

struct GeneralizedConfiguration {
    FunctionFamily family;
    std::vector<Point> points; // n points in R^k

    int size() const { return static_cast<int>(points.size()); }
};

// File format: line 1 "family <name> [params]" (name in {affine, circles,
// conics, interpolation} or "custom" followed by ';'-separated basis
// polynomials), line 2 "k n", then n lines of k rationals each.
GeneralizedConfiguration parse_gconfig(const std::string& text);
GeneralizedConfiguration read_gconfig(const std::string& path);
std::string format_gconfig(const GeneralizedConfiguration& gcfg);

/// Pointwise basis evaluation, label order preserved.
Configuration veronese_image(const GeneralizedConfiguration& gcfg);

/// C-genericity, implemented as genericity of the Veronese image (which
/// implies all vanishing lines I(S) are distinct and 1-dimensional).
bool c_generic(const GeneralizedConfiguration& gcfg);
void require_c_generic(const GeneralizedConfiguration& gcfg);

enum class CountRoute {
    image,  // det-sign separation of the Veronese image
    direct, // solve I(S) in function space and test f(P_i) f(P_j) < 0
};

/// Number of d-subsets S with f(P_i) f(P_j) < 0 for nonzero f in I(S).
long c_separating_count(const GeneralizedConfiguration& gcfg, int i, int j,
                        CountRoute route = CountRoute::image);

/// Separation predicate for one subset (sorted labels disjoint from i, j).
bool c_subset_separates(const GeneralizedConfiguration& gcfg, const std::vector<int>& subset,
                        int i, int j, CountRoute route);

bool c_orchard_related(const GeneralizedConfiguration& gcfg, int i, int j,
                       CountRoute route = CountRoute::image);

/// Partition of the Veronese image; the direct-count relation against the
/// anchor label is re-derived and hard-asserted to agree.
OrchardPartition c_orchard_partition(const GeneralizedConfiguration& gcfg);

/// Inverse stereographic lift through the north pole: plane points to
/// rational points on the unit sphere in R^3.
Configuration inverse_stereographic(const Configuration& plane);

} // namespace orchard
