#pragma once

#include <optional>
#include <vector>

#include "orchard/config.hpp"

namespace orchard {

enum class Sign : int { minus = -1, zero = 0, plus = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign from_int(int v) { return v < 0 ? Sign::minus : (v > 0 ? Sign::plus : Sign::zero); }
inline Sign operator*(Sign a, Sign b) { return from_int(to_int(a) * to_int(b)); }
inline Sign operator-(Sign a) { return from_int(-to_int(a)); }
Sign sign_of(const Rat& value);

/// Exact determinant of a square rational matrix (row major). Denominators
/// are cleared row-wise, the integer determinant is computed by
/// fraction-free Bareiss elimination, and the scale is divided back out.
Rat det_value(const std::vector<std::vector<Rat>>& rows);
Sign det_sign_matrix(const std::vector<std::vector<Rat>>& rows);

/// Sign of det of the d x d matrix with rows s[0]-x, ..., s[d-1]-x.
/// Throws on dimension mismatch or |s| != dim.
Sign det_sign(const std::vector<Point>& s, const Point& x);

/// Orientation of the simplex on labels (tuple[0], ..., tuple[d]) of cfg:
/// det sign of rows P_tuple[k] - P_tuple[0], k = 1..d.
Sign simplex_sign(const Configuration& cfg, const std::vector<int>& tuple);

/// Normal of the affine hyperplane spanned by d points in R^d: the
/// generalized cross product of pts[k]-pts[0], k = 1..d-1. Each of the d
/// components is a (d-1)x(d-1) minor; when `minor_counter` is given it is
/// incremented once per minor. For d = 1 the convention is the scalar (1).
std::vector<Rat> hyperplane_normal(const std::vector<Point>& pts,
                                   unsigned long* minor_counter = nullptr);

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b);

/// Every subset of at most dim+1 points affinely independent. For n > d+1
/// this checks all (d+1)-subsets; for n <= d+1 the whole set.
bool is_generic(const Configuration& cfg);

/// First degenerate subset in lexicographic order, if any (1-based labels).
std::optional<std::vector<int>> genericity_violation(const Configuration& cfg);

/// Throws OrchardError(not_generic) naming a violating subset.
void require_generic(const Configuration& cfg);

/// Orientation sign of every sorted (d+1)-subset of labels; the entry for
/// (i0 < ... < id) is the orientation of that simplex. Encodes the
/// isomorphism type of a generic configuration.
class Chirotope {
public:
    Chirotope(int dim, int n, std::vector<Sign> entries)
        : dim_(dim), n_(n), entries_(std::move(entries)) {}

    int dim() const { return dim_; }
    int size() const { return n_; }
    long entry_count() const { return static_cast<long>(entries_.size()); }

    /// Entry for a sorted (dim+1)-tuple of 1-based labels.
    Sign at(const std::vector<int>& sorted_tuple) const;

    /// Labels of tuples whose sign differs, in lexicographic order.
    std::vector<std::vector<int>> diff(const Chirotope& other) const;

    bool operator==(const Chirotope&) const = default;

private:
    long rank(const std::vector<int>& sorted_tuple) const;

    int dim_;
    int n_;
    std::vector<Sign> entries_; // indexed by combinatorial rank
};

Chirotope chirotope(const Configuration& cfg);

/// True iff the chirotopes agree sign-for-sign under the bijection
/// (1-based map from labels of a to labels of b, accounting for the
/// re-sorting parity of image tuples).
bool same_isomorphism_type(const Configuration& a, const Configuration& b,
                           const std::vector<int>& bijection);

} // namespace orchard
