#pragma once

#include <map>
#include <memory>
#include <vector>

#include "orchard/predicates.hpp"

namespace orchard {

struct SeparationCount {
    int i = 0;
    int j = 0;
    long count = 0; // number of separating hyperplanes spanned by d others
};

/// Exact count of d-subsets S of labels \ {i,j} whose affine span separates
/// P_i from P_j (opposite strict sides).
SeparationCount separating_count(const Configuration& cfg, int i, int j);

/// P_i ~ P_j iff i == j or separating_count ≡ C(n-3, d-1) (mod 2).
bool orchard_related(const Configuration& cfg, int i, int j);

/// Same relation evaluated as the sign of (-1)^C(n-3,d-1) * prod over S of
/// det(S-P_i) det(S-P_j) — a product-of-signs route that never counts.
bool sign_product_related(const Configuration& cfg, int i, int j);

/// Canonical two-class partition: label 1 always sits in classA; classB may
/// be empty.
struct OrchardPartition {
    std::vector<int> class_a;
    std::vector<int> class_b;

    bool same_class(int i, int j) const;
    bool in_a(int label) const;

    bool operator==(const OrchardPartition&) const = default;
};

enum class PartitionMethod { all_pairs, anchor };

struct PartitionStats {
    PartitionMethod method = PartitionMethod::all_pairs;
    // all_pairs: one per (pair, subset) separation test, C(n,2)*C(n-2,d).
    // anchor: one per functional cofactor minor, (n-1)*C(n-2,d-1).
    unsigned long predicate_count = 0;
};

struct PartitionResult {
    OrchardPartition partition;
    PartitionStats stats;
    // all_pairs keeps the full count table for reuse (n x n, 0 on diagonal)
    std::vector<std::vector<long>> pair_counts;
};

/// all_pairs evaluates every pairwise count and hard-asserts the relation is
/// an equivalence with at most two classes; anchor derives everything from
/// the parities of n(P_1, P_i) via hyperplane functionals and transitivity.
/// Both return the identical canonical partition.
PartitionResult orchard_partition(const Configuration& cfg,
                                  PartitionMethod method = PartitionMethod::all_pairs);

/// Rooted binary tree from recursive partitioning; a node keeps its
/// original labels, children exist iff the node splits into two nonempty
/// classes, and the child holding the smallest label comes first.
struct OrchardTree {
    std::vector<int> set;
    std::vector<std::unique_ptr<OrchardTree>> children; // empty or size 2

    bool leaf() const { return children.empty(); }
};

OrchardTree orchard_tree(const Configuration& cfg);

/// Per-class sign data for the phi / omega invariants.
struct ClassSigns {
    std::vector<int> members;   // sorted labels of the class
    bool well_defined = true;   // binomial condition from the construction
    bool canonicalized = false; // global sign fixed by the smallest member
};

struct PhiResult {
    std::map<int, Sign> value; // every label
    ClassSigns class_a;
    ClassSigns class_b;
};

/// phi(P) = sign of the product over sorted d-subsets S of the opposite
/// class of det(S - P). Well-defined per class iff C(n-2-|A|, d-2) is even;
/// otherwise defined up to a global sign and canonicalized so the smallest
/// member of the class has value +1.
PhiResult phi_invariant(const Configuration& cfg, const OrchardPartition& partition);

struct OmegaResult {
    std::map<std::pair<int, int>, Sign> value; // ordered same-class pairs
    ClassSigns class_a;
    ClassSigns class_b;
    bool antisymmetric_a = true; // omega(P,Q) == -omega(Q,P) throughout class A
    bool antisymmetric_b = true;
};

/// omega(P,Q) = sign of the product over sorted (d-1)-subsets of the
/// opposite class of det(P-Q, S-Q rows). Well-defined per class iff
/// C(n-3-|A|, d-3) is even. Antisymmetry holds exactly when the factor
/// count C(n-|A|, d-1) is odd; the result records what was observed.
OmegaResult omega_invariant(const Configuration& cfg, const OrchardPartition& partition);

} // namespace orchard
