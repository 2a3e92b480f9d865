#pragma once

#include <json.hpp>

#include "orchard/families.hpp"
#include "orchard/flips.hpp"
#include "orchard/homogeneous.hpp"
#include "orchard/orchard.hpp"
#include "orchard/wiring.hpp"

namespace orchard {

using Json = nlohmann::json;

// JSON report builders. The CLI prints these documents verbatim, so their
// shape is part of the external interface; nlohmann keeps object keys
// sorted, which makes every dump byte-deterministic.

Json partition_json(const OrchardPartition& partition);
Json partition_report_json(const Configuration& cfg, const PartitionResult& result,
                           bool with_invariants, int pair_i, int pair_j, bool with_stats = false);
Json tree_json(const OrchardTree& tree);
Json check_affine_json(const Configuration& cfg);
Json check_homogeneous_json(const HomogeneousConfiguration& hcfg);
Json check_wiring_json(const WiringDiagram& wd);
Json flip_json(const FlipResult& result, const FlipCheckReport& check, const FlipClass& fclass);
Json parity_json(const ParityExperimentReport& report);
Json family_json(const GeneralizedConfiguration& gcfg, const OrchardPartition& partition);
Json projective_json(const HomogeneousConfiguration& hcfg, const OrchardPartition& partition);
Json spherical_json(const HomogeneousConfiguration& hcfg, const SignedPartition& partition);
Json gamma_json(const HomogeneousConfiguration& hcfg, const std::vector<GammaEdge>& edges,
                const TriangleReport& triangles);
Json wiring_report_json(const WiringDiagram& wd);
Json digon_json(const DigonCounts& counts);
Json orientation_json(const OrientationResult& result);
Json triangle_move_json(const WiringDiagram& before, int position, const WiringDiagram& after);
Json desingularize_json(const WiringDiagram& wd, const CurveReport& report);
Json dualize_json(const DualizeResult& result);

/// Compact single-line dump plus trailing newline: the CLI output format.
std::string dump_report(const Json& report);

/// Key/value text rendering for --format plain.
std::string plain_report(const Json& report);

} // namespace orchard
