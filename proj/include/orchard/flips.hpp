#pragma once

#include <optional>
#include <vector>

#include "orchard/orchard.hpp"
#include "orchard/random.hpp"

namespace orchard {

struct FlipSpec {
    std::vector<int> flipset; // sorted, d+1 labels
    int mover = 0;            // element of flipset
};

struct FlipResult {
    Configuration before;
    Configuration after;
    FlipSpec spec;
    Rat stop_parameter; // final parameter on the segment; crossing is at 1/2
};

/// Moves the mover along the segment P + t * 2(proj_H(P) - P) toward its
/// reflection across H = span(flipset \ mover), stopping halfway between
/// the H-crossing at t = 1/2 and the next wall (or at t = 1 when there is
/// none), then snaps the final point to the cheapest dyadic rational that
/// stays in the destination cell. The result is generic and its chirotope
/// differs from the input's in exactly the flipset entry.
///
/// Throws OrchardError(input) when some other wall is crossed at a
/// parameter in (0, 1/2]: no single-point motion along this segment can
/// realize the flip from the given configuration.
FlipResult apply_flip(const Configuration& cfg, const FlipSpec& spec);

/// Non-throwing probe used by the random drivers.
std::optional<FlipResult> try_flip(const Configuration& cfg, const FlipSpec& spec);

/// Uniformly samples (flipset, mover) until a realizable flip is found.
FlipResult random_realizable_flip(const Configuration& cfg, Rng& rng, int retries = kDefaultRetries);

struct FlipCheckReport {
    bool pass = true;
    long pairs_checked = 0;
    std::optional<std::pair<int, int>> counterexample;
};

/// Pairs inside the flipset or fully outside must keep their relation;
/// mixed pairs must toggle it.
FlipCheckReport verify_flip_proposition(const FlipResult& result);

struct FlipClass {
    int count_a = 0;
    int count_b = 0;
    bool monochromatic = false;
    // d = 2k+1 with exactly k+1 flipset members in each class
    bool equivalence_eligible = false;
};

FlipClass classify_flip(int dim, const OrchardPartition& before, const FlipSpec& spec);

struct WalkStepRecord {
    std::vector<int> flipset;
    int mover = 0;
    int selected_parity = 0; // |selected class| mod 2 after the step
};

struct ParityTrialRecord {
    std::uint64_t seed = 0;
    int initial_a = 0;
    int initial_b = 0;
    std::vector<WalkStepRecord> steps;
    bool pass = true;
};

struct ParityExperimentReport {
    int n = 0;
    int d = 0;
    int trials = 0;
    int steps = 0;
    std::uint64_t seed = 0;
    std::string law;                // "toggle", "constant", or "fixed"
    std::optional<int> pi_expected; // for odd d, even n
    std::vector<ParityTrialRecord> records;
    bool pass = true;
};

/// Random generic configurations plus random flip walks, checking the
/// parity law that applies to (n, d): even d toggles the selected-class
/// parity at every flip; odd d keeps it constant; odd d with even n pins
/// both class parities to pi(n, d) = (C(n-3, d-1) odd ? (n/2) mod 2 : 0).
ParityExperimentReport pointed_parity_experiment(int n, int d, int trials, int steps,
                                                 std::uint64_t seed);

} // namespace orchard
