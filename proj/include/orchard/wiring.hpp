#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orchard/orchard.hpp"
#include "orchard/random.hpp"

namespace orchard {

/// Simple pseudoline arrangement in RP^2 as a wiring diagram: n wires,
/// initial order identity (wire i at level i, level 1 at the bottom), and a
/// word of C(n,2) swap positions k in {1..n-1}, each swapping the wires at
/// levels k and k+1. Every unordered wire pair swaps exactly once. Wires
/// close up projectively: right-edge level l is glued to left-edge level
/// n+1-l.
struct WiringDiagram {
    int n = 0;
    std::vector<int> word;

    bool operator==(const WiringDiagram&) const = default;
};

// File format: line 1 "wiring n", line 2 the C(n,2) swap positions.
WiringDiagram parse_wiring(const std::string& text);
WiringDiagram read_wiring(const std::string& path);
std::string format_wiring(const WiringDiagram& wd);

/// Replays the word; throws OrchardError(input) with the failing 1-based
/// position when a pair swaps twice or the length is wrong.
void validate_diagram(const WiringDiagram& wd);
bool diagram_valid(const WiringDiagram& wd);

/// Crossing counts of the other n-2 wires in the two digons of RP^2 minus
/// wires i and j. The wedge digon is the union of the two regions between
/// the wires (joined through infinity); the band digon is above-both union
/// below-both. wedge + band = C(n-2, 2).
struct DigonCounts {
    int i = 0;
    int j = 0;
    long wedge = 0;
    long band = 0;
};

DigonCounts digon_counts(const WiringDiagram& wd, int i, int j);

/// Partition of the wires, defined when C(n-2,2) is even (both digon
/// parities agree): i ~ j iff wedge ≡ C(n-3,2) (mod 2). The equivalence law
/// is hard-asserted; wire 1 lands in class A.
OrchardPartition pseudoline_partition(const WiringDiagram& wd);

/// Direction bit per wire; forward = left-to-right in the diagram.
struct WireOrientation {
    std::vector<bool> forward;

    WireOrientation complement() const;
    bool operator==(const WireOrientation&) const = default;
};

/// Compatibility at a crossing pair: the digon whose boundary the two
/// oriented wires traverse coherently is the band digon when the direction
/// bits agree and the wedge digon when they differ (frozen stretchable-case
/// rule); the orientation is compatible at (i,j) iff that digon holds
/// ≡ C(n-3,2) (mod 2) crossings.
bool orientation_compatible(const WiringDiagram& wd, const WireOrientation& orientation);

struct OrientationResult {
    WireOrientation primary;    // wire 1 forward
    WireOrientation complement; // all bits flipped
};

/// The exactly-two compatible orientations, defined when C(n-2,2) is odd.
/// Pair (1,j) forces every bit given wire 1 forward; full compatibility is
/// then hard-asserted.
OrientationResult pseudoline_orientation(const WiringDiagram& wd);

/// Rewrites (k, k+-1, k) at the 1-based word position to (k+-1, k, k+-1);
/// the three swaps involve three mutually crossing wires.
WiringDiagram triangle_move(const WiringDiagram& wd, int position);

/// Positions where a triangle move applies.
std::vector<int> triangle_move_positions(const WiringDiagram& wd);

/// Wires of the three swaps at a triangle-move position.
std::vector<int> triangle_move_wires(const WiringDiagram& wd, int position);

struct CurveReport {
    std::string mode; // "respect" or "oppose"
    int curves = 0;
    int one_sided = 0; // homologically nontrivial in RP^2
};

enum class SmoothingMode { respect, oppose };

/// Smooths every crossing (respecting the wire orientations or the other
/// generic way), traces the strands through the projective gluing, and
/// reports the closed-curve decomposition. The orientation must be
/// compatible. One-sided-count parity always equals n mod 2.
CurveReport desingularize(const WiringDiagram& wd, const WireOrientation& orientation,
                          SmoothingMode mode);

/// Point-line duality: point (a, b) maps to the line y = a x - b; crossings
/// are swept left to right into a wiring word. A seeded rational rotation
/// is applied first until all dual slopes are distinct (coincident crossing
/// abscissae are fine: genericity keeps them level-disjoint, and they are
/// processed bottom-up). wire_of_point maps point labels to wire labels.
struct DualizeResult {
    WiringDiagram diagram;
    std::vector<int> wire_of_point;
    Rat rotation; // tangent-like parameter of the applied rotation
};

DualizeResult dualize(const Configuration& cfg, std::uint64_t seed = 0,
                      int retries = kDefaultRetries);

/// Uniform-ish random simple wiring diagram (greedy random valid swaps).
WiringDiagram random_wiring(int n, Rng& rng);

} // namespace orchard
