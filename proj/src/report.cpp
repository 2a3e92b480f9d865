#include "orchard/report.hpp"

#include <algorithm>
#include <sstream>

#include "orchard/combinatorics.hpp"

namespace orchard {

Json partition_json(const OrchardPartition& partition) {
    return Json{{"classA", partition.class_a}, {"classB", partition.class_b}};
}

namespace {

const char* method_name(PartitionMethod method) {
    return method == PartitionMethod::all_pairs ? "all_pairs" : "anchor";
}

Json class_signs_json(const ClassSigns& cls) {
    return Json{{"members", cls.members},
                {"well_defined", cls.well_defined},
                {"canonicalized", cls.canonicalized}};
}

} // namespace

Json partition_report_json(const Configuration& cfg, const PartitionResult& result,
                           bool with_invariants, int pair_i, int pair_j, bool with_stats) {
    Json report = partition_json(result.partition);
    if (pair_i > 0 && pair_j > 0) {
        const SeparationCount sc = separating_count(cfg, pair_i, pair_j);
        report["pair"] = Json{{"i", sc.i},
                              {"j", sc.j},
                              {"count", sc.count},
                              {"related", result.partition.same_class(sc.i, sc.j)}};
    }
    if (with_invariants) {
        const PhiResult phi = phi_invariant(cfg, result.partition);
        Json phi_values = Json::object();
        for (const auto& [label, sign] : phi.value)
            phi_values[std::to_string(label)] = to_int(sign);
        report["phi"] = Json{{"classA", class_signs_json(phi.class_a)},
                             {"classB", class_signs_json(phi.class_b)},
                             {"values", phi_values}};
        const OmegaResult omega = omega_invariant(cfg, result.partition);
        Json omega_values = Json::object();
        for (const auto& [pair, sign] : omega.value)
            omega_values[std::to_string(pair.first) + "," + std::to_string(pair.second)] =
                to_int(sign);
        report["omega"] = Json{{"classA", class_signs_json(omega.class_a)},
                               {"classB", class_signs_json(omega.class_b)},
                               {"antisymmetricA", omega.antisymmetric_a},
                               {"antisymmetricB", omega.antisymmetric_b},
                               {"values", omega_values}};
    }
    if (with_stats)
        report["stats"] = Json{{"method", method_name(result.stats.method)},
                               {"predicates", result.stats.predicate_count}};
    return report;
}

Json tree_json(const OrchardTree& tree) {
    Json node{{"set", tree.set}};
    if (!tree.leaf()) {
        Json children = Json::array();
        for (const auto& child : tree.children)
            children.push_back(tree_json(*child));
        node["children"] = std::move(children);
    }
    return node;
}

Json check_affine_json(const Configuration& cfg) {
    require_generic(cfg);
    return Json{{"kind", "affine"}, {"d", cfg.dim}, {"n", cfg.size()}, {"generic", true}};
}

Json check_homogeneous_json(const HomogeneousConfiguration& hcfg) {
    require_h_generic(hcfg);
    return Json{{"kind", hcfg.spherical ? "sphere" : "proj"},
                {"d", hcfg.dim},
                {"n", hcfg.size()},
                {"generic", true}};
}

Json check_wiring_json(const WiringDiagram& wd) {
    validate_diagram(wd);
    return Json{{"kind", "wiring"}, {"n", wd.n}, {"crossings", wd.word.size()}, {"valid", true}};
}

namespace {

Json points_json(const Configuration& cfg) {
    Json rows = Json::array();
    for (const auto& p : cfg.points) {
        Json row = Json::array();
        for (const auto& c : p)
            row.push_back(format_rat(c));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

Json flip_json(const FlipResult& result, const FlipCheckReport& check, const FlipClass& fclass) {
    Json verification{{"pass", check.pass}, {"pairs_checked", check.pairs_checked}};
    verification["counterexample"] =
        check.counterexample ? Json{check.counterexample->first, check.counterexample->second}
                             : Json(nullptr);
    return Json{{"d", result.before.dim},
                {"n", result.before.size()},
                {"flipset", result.spec.flipset},
                {"mover", result.spec.mover},
                {"parameter", format_rat(result.stop_parameter)},
                {"before", points_json(result.before)},
                {"after", points_json(result.after)},
                {"classification", Json{{"countA", fclass.count_a},
                                        {"countB", fclass.count_b},
                                        {"monochromatic", fclass.monochromatic},
                                        {"equivalence_eligible", fclass.equivalence_eligible}}},
                {"verification", std::move(verification)}};
}

Json parity_json(const ParityExperimentReport& report) {
    Json records = Json::array();
    for (const auto& rec : report.records) {
        Json steps = Json::array();
        for (const auto& s : rec.steps)
            steps.push_back(Json{{"flipset", s.flipset},
                                 {"mover", s.mover},
                                 {"selected_parity", s.selected_parity}});
        records.push_back(Json{{"seed", rec.seed},
                               {"initialA", rec.initial_a},
                               {"initialB", rec.initial_b},
                               {"pass", rec.pass},
                               {"steps", std::move(steps)}});
    }
    Json out{{"n", report.n},
             {"d", report.d},
             {"trials", report.trials},
             {"walk_steps", report.steps},
             {"seed", report.seed},
             {"law", report.law},
             {"pass", report.pass},
             {"records", std::move(records)}};
    out["pi_expected"] = report.pi_expected ? Json(*report.pi_expected) : Json(nullptr);
    return out;
}

Json family_json(const GeneralizedConfiguration& gcfg, const OrchardPartition& partition) {
    std::vector<std::string> basis;
    for (const auto& b : gcfg.family.basis)
        basis.push_back(b.to_string());
    Json report = partition_json(partition);
    report["family"] = Json{{"name", gcfg.family.name},
                            {"k", gcfg.family.source_dim},
                            {"d", gcfg.family.sep_dim},
                            {"basis", basis}};
    report["n"] = gcfg.size();
    return report;
}

Json projective_json(const HomogeneousConfiguration& hcfg, const OrchardPartition& partition) {
    Json report = partition_json(partition);
    report["d"] = hcfg.dim;
    report["n"] = hcfg.size();
    return report;
}

Json spherical_json(const HomogeneousConfiguration& hcfg, const SignedPartition& partition) {
    return Json{{"d", hcfg.dim},
                {"n", hcfg.size()},
                {"antipodal_equivalent", partition.antipodal_equivalent},
                {"classA", partition.class_a()},
                {"classB", partition.class_b()}};
}

Json gamma_json(const HomogeneousConfiguration& hcfg, const std::vector<GammaEdge>& edges,
                const TriangleReport& triangles) {
    Json edge_list = Json::array();
    for (const auto& e : edges)
        edge_list.push_back(Json{{"pair", {e.i, e.j}},
                                 {"count", e.count},
                                 {"component", e.bounded ? "bounded" : "unbounded"},
                                 {"class", e.homology_class}});
    Json out{{"d", hcfg.dim},
             {"n", hcfg.size()},
             {"edges", std::move(edge_list)},
             {"triangles_checked", triangles.triangles_checked},
             {"homologically_trivial", triangles.pass}};
    out["witness"] = triangles.witness ? Json(*triangles.witness) : Json(nullptr);
    return out;
}

Json wiring_report_json(const WiringDiagram& wd) {
    validate_diagram(wd);
    const bool even = binom(wd.n - 2, 2) % 2 == 0;
    Json out{{"n", wd.n}, {"word", wd.word}, {"valid", true}, {"parity", even ? "even" : "odd"}};
    if (even) {
        out["partition"] = partition_json(pseudoline_partition(wd));
    } else {
        out["orientation"] = orientation_json(pseudoline_orientation(wd));
    }
    return out;
}

Json digon_json(const DigonCounts& counts) {
    return Json{{"pair", {counts.i, counts.j}}, {"wedge", counts.wedge}, {"band", counts.band}};
}

namespace {

Json orientation_wires_json(const WireOrientation& orientation) {
    std::vector<int> forward;
    std::vector<int> backward;
    for (size_t w = 0; w < orientation.forward.size(); ++w)
        (orientation.forward[w] ? forward : backward).push_back(static_cast<int>(w) + 1);
    return Json{{"forward", forward}, {"backward", backward}};
}

} // namespace

Json orientation_json(const OrientationResult& result) {
    return Json{{"primary", orientation_wires_json(result.primary)},
                {"complement", orientation_wires_json(result.complement)}};
}

Json triangle_move_json(const WiringDiagram& before, int position, const WiringDiagram& after) {
    return Json{{"position", position},
                {"wires", triangle_move_wires(before, position)},
                {"word", after.word}};
}

Json desingularize_json(const WiringDiagram& wd, const CurveReport& report) {
    return Json{{"n", wd.n},
                {"mode", report.mode},
                {"curves", report.curves},
                {"one_sided", report.one_sided}};
}

Json dualize_json(const DualizeResult& result) {
    return Json{{"n", result.diagram.n},
                {"word", result.diagram.word},
                {"wire_of_point", result.wire_of_point},
                {"rotation", format_rat(result.rotation)}};
}

std::string dump_report(const Json& report) {
    return report.dump() + "\n";
}

namespace {

void plain_walk(const Json& value, const std::string& prefix, std::string& out) {
    if (value.is_object()) {
        for (const auto& [key, child] : value.items())
            plain_walk(child, prefix.empty() ? key : prefix + "." + key, out);
        return;
    }
    if (value.is_array()) {
        const bool scalars = std::all_of(value.begin(), value.end(), [](const Json& v) {
            return !v.is_object() && !v.is_array();
        });
        if (scalars) {
            std::string joined;
            for (const auto& v : value)
                joined += (joined.empty() ? "" : " ") + (v.is_string() ? v.get<std::string>() : v.dump());
            out += prefix + ": " + joined + "\n";
            return;
        }
        for (size_t i = 0; i < value.size(); ++i)
            plain_walk(value[i], prefix + "[" + std::to_string(i) + "]", out);
        return;
    }
    out += prefix + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
}

} // namespace

std::string plain_report(const Json& report) {
    std::string out;
    plain_walk(report, "", out);
    return out;
}

} // namespace orchard
