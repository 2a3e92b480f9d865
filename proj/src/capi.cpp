#include "orchard/orchard_c.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "orchard/error.hpp"
#include "orchard/report.hpp"
#include "orchard/svg.hpp"

// Opaque handle types wrap the C++ values.
struct orc_config {
    orchard::Configuration value;
};
struct orc_hconfig {
    orchard::HomogeneousConfiguration value;
};
struct orc_gconfig {
    orchard::GeneralizedConfiguration value;
};
struct orc_wiring {
    orchard::WiringDiagram value;
};

namespace {

thread_local std::string t_last_error = "{}";

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

orc_status status_of(orchard::ErrorCode code) {
    using orchard::ErrorCode;
    switch (code) {
    case ErrorCode::input: return ORC_ERR_INPUT;
    case ErrorCode::not_generic: return ORC_ERR_NOT_GENERIC;
    case ErrorCode::parity_unsupported: return ORC_ERR_PARITY;
    case ErrorCode::retry_exhausted: return ORC_ERR_RETRY;
    case ErrorCode::io: return ORC_ERR_IO;
    case ErrorCode::internal: return ORC_ERR_INTERNAL;
    }
    return ORC_ERR_INTERNAL;
}

template <typename Fn>
orc_status guard(Fn&& fn) {
    try {
        fn();
        t_last_error = "{}";
        return ORC_OK;
    } catch (const orchard::OrchardError& e) {
        t_last_error = e.to_json().dump();
        return status_of(e.code());
    } catch (const std::exception& e) {
        t_last_error =
            nlohmann::json{{"error", {{"code", "internal_error"}, {"message", e.what()}}}}.dump();
        return ORC_ERR_INTERNAL;
    }
}

orchard::PartitionMethod method_from(const char* name) {
    const std::string m = name ? name : "all_pairs";
    if (m == "all_pairs")
        return orchard::PartitionMethod::all_pairs;
    if (m == "anchor")
        return orchard::PartitionMethod::anchor;
    throw orchard::OrchardError(orchard::ErrorCode::input,
                                "unknown partition method '" + m + "'");
}

} // namespace

extern "C" {

const char* orc_version(void) {
    return "1.0.0";
}

void orc_string_free(char* s) {
    std::free(s);
}

const char* orc_last_error(void) {
    return t_last_error.c_str();
}

orc_status orc_config_parse(const char* text, orc_config** out) {
    return guard([&] { *out = new orc_config{orchard::parse_configuration(text ? text : "")}; });
}

orc_status orc_config_read(const char* path, orc_config** out) {
    return guard([&] { *out = new orc_config{orchard::read_configuration(path ? path : "")}; });
}

void orc_config_free(orc_config* cfg) {
    delete cfg;
}

orc_status orc_config_format(const orc_config* cfg, char** out) {
    return guard([&] { *out = dup_string(orchard::format_configuration(cfg->value)); });
}

int orc_config_dim(const orc_config* cfg) {
    return cfg ? cfg->value.dim : 0;
}

int orc_config_size(const orc_config* cfg) {
    return cfg ? cfg->value.size() : 0;
}

orc_status orc_config_random(int n, int d, unsigned long long seed, long coord_bound, int retries,
                             orc_config** out) {
    return guard([&] {
        *out = new orc_config{orchard::random_generic(n, d, seed, coord_bound, retries)};
    });
}

orc_status orc_check_json(const orc_config* cfg, char** out) {
    return guard(
        [&] { *out = dup_string(orchard::dump_report(orchard::check_affine_json(cfg->value))); });
}

orc_status orc_partition_json(const orc_config* cfg, const char* method, int with_invariants,
                              int pair_i, int pair_j, int with_stats, char** out) {
    return guard([&] {
        const auto result = orchard::orchard_partition(cfg->value, method_from(method));
        *out = dup_string(orchard::dump_report(orchard::partition_report_json(
            cfg->value, result, with_invariants != 0, pair_i, pair_j, with_stats != 0)));
    });
}

orc_status orc_tree_json(const orc_config* cfg, char** out) {
    return guard([&] {
        *out = dup_string(orchard::dump_report(orchard::tree_json(orchard::orchard_tree(cfg->value))));
    });
}

orc_status orc_flip_json(const orc_config* cfg, const int* flipset, int flipset_len, int mover,
                         char** out) {
    return guard([&] {
        orchard::FlipSpec spec;
        spec.flipset.assign(flipset, flipset + flipset_len);
        spec.mover = mover;
        const auto partition_before =
            orchard::orchard_partition(cfg->value, orchard::PartitionMethod::anchor).partition;
        const auto result = orchard::apply_flip(cfg->value, spec);
        const auto check = orchard::verify_flip_proposition(result);
        const auto fclass = orchard::classify_flip(cfg->value.dim, partition_before, spec);
        *out = dup_string(orchard::dump_report(orchard::flip_json(result, check, fclass)));
    });
}

orc_status orc_parity_json(int n, int d, int trials, int steps, unsigned long long seed,
                           char** out) {
    return guard([&] {
        *out = dup_string(orchard::dump_report(
            orchard::parity_json(orchard::pointed_parity_experiment(n, d, trials, steps, seed))));
    });
}

orc_status orc_render_svg(const orc_config* cfg, int pair_i, int pair_j, char** out) {
    return guard([&] {
        const auto partition =
            orchard::orchard_partition(cfg->value, orchard::PartitionMethod::all_pairs).partition;
        *out = dup_string(orchard::render_svg(cfg->value, partition, pair_i, pair_j));
    });
}

orc_status orc_dualize_json(const orc_config* cfg, unsigned long long seed, int retries,
                            char** out) {
    return guard([&] {
        *out = dup_string(
            orchard::dump_report(orchard::dualize_json(orchard::dualize(cfg->value, seed, retries))));
    });
}

orc_status orc_gconfig_parse(const char* text, orc_gconfig** out) {
    return guard([&] { *out = new orc_gconfig{orchard::parse_gconfig(text ? text : "")}; });
}

orc_status orc_gconfig_read(const char* path, orc_gconfig** out) {
    return guard([&] { *out = new orc_gconfig{orchard::read_gconfig(path ? path : "")}; });
}

void orc_gconfig_free(orc_gconfig* gcfg) {
    delete gcfg;
}

orc_status orc_gcheck_json(const orc_gconfig* gcfg, char** out) {
    return guard([&] {
        orchard::require_c_generic(gcfg->value);
        const nlohmann::json doc{{"kind", "family"},
                                 {"family", gcfg->value.family.name},
                                 {"k", gcfg->value.family.source_dim},
                                 {"d", gcfg->value.family.sep_dim},
                                 {"n", gcfg->value.size()},
                                 {"c_generic", true}};
        *out = dup_string(orchard::dump_report(doc));
    });
}

orc_status orc_family_json(const orc_gconfig* gcfg, char** out) {
    return guard([&] {
        const auto partition = orchard::c_orchard_partition(gcfg->value);
        *out = dup_string(orchard::dump_report(orchard::family_json(gcfg->value, partition)));
    });
}

orc_status orc_hconfig_parse(const char* text, orc_hconfig** out) {
    return guard([&] { *out = new orc_hconfig{orchard::parse_hconfig(text ? text : "")}; });
}

orc_status orc_hconfig_read(const char* path, orc_hconfig** out) {
    return guard([&] { *out = new orc_hconfig{orchard::read_hconfig(path ? path : "")}; });
}

void orc_hconfig_free(orc_hconfig* hcfg) {
    delete hcfg;
}

orc_status orc_hcheck_json(const orc_hconfig* hcfg, char** out) {
    return guard([&] {
        *out = dup_string(orchard::dump_report(orchard::check_homogeneous_json(hcfg->value)));
    });
}

orc_status orc_projective_json(const orc_hconfig* hcfg, unsigned long long seed, int retries,
                               char** out) {
    return guard([&] {
        const auto partition = orchard::projective_orchard(hcfg->value, seed, retries);
        *out = dup_string(orchard::dump_report(orchard::projective_json(hcfg->value, partition)));
    });
}

orc_status orc_spherical_json(const orc_hconfig* hcfg, unsigned long long seed, int retries,
                              char** out) {
    return guard([&] {
        const auto partition = orchard::spherical_orchard(hcfg->value, seed, retries);
        *out = dup_string(orchard::dump_report(orchard::spherical_json(hcfg->value, partition)));
    });
}

orc_status orc_gamma_json(const orc_hconfig* hcfg, unsigned long long seed, int retries,
                          char** out) {
    return guard([&] {
        const auto edges = orchard::gamma_graph(hcfg->value, seed, retries);
        const auto triangles = orchard::verify_homological_triviality(hcfg->value, seed, retries);
        *out = dup_string(
            orchard::dump_report(orchard::gamma_json(hcfg->value, edges, triangles)));
    });
}

orc_status orc_wiring_parse(const char* text, orc_wiring** out) {
    return guard([&] { *out = new orc_wiring{orchard::parse_wiring(text ? text : "")}; });
}

orc_status orc_wiring_read(const char* path, orc_wiring** out) {
    return guard([&] { *out = new orc_wiring{orchard::read_wiring(path ? path : "")}; });
}

void orc_wiring_free(orc_wiring* wd) {
    delete wd;
}

orc_status orc_wiring_format(const orc_wiring* wd, char** out) {
    return guard([&] { *out = dup_string(orchard::format_wiring(wd->value)); });
}

orc_status orc_wiring_check_json(const orc_wiring* wd, char** out) {
    return guard(
        [&] { *out = dup_string(orchard::dump_report(orchard::check_wiring_json(wd->value))); });
}

orc_status orc_wiring_report_json(const orc_wiring* wd, char** out) {
    return guard(
        [&] { *out = dup_string(orchard::dump_report(orchard::wiring_report_json(wd->value))); });
}

orc_status orc_wiring_digon_json(const orc_wiring* wd, int i, int j, char** out) {
    return guard([&] {
        *out = dup_string(orchard::dump_report(orchard::digon_json(orchard::digon_counts(wd->value, i, j))));
    });
}

orc_status orc_wiring_move_json(const orc_wiring* wd, int position, char** out) {
    return guard([&] {
        const auto moved = orchard::triangle_move(wd->value, position);
        *out = dup_string(
            orchard::dump_report(orchard::triangle_move_json(wd->value, position, moved)));
    });
}

orc_status orc_wiring_desing_json(const orc_wiring* wd, const char* mode, char** out) {
    return guard([&] {
        const std::string m = mode ? mode : "respect";
        orchard::SmoothingMode smode;
        if (m == "respect")
            smode = orchard::SmoothingMode::respect;
        else if (m == "oppose")
            smode = orchard::SmoothingMode::oppose;
        else
            throw orchard::OrchardError(orchard::ErrorCode::input,
                                        "desingularization mode must be 'respect' or 'oppose'");
        const auto orientations = orchard::pseudoline_orientation(wd->value);
        const auto report = orchard::desingularize(wd->value, orientations.primary, smode);
        *out = dup_string(orchard::dump_report(orchard::desingularize_json(wd->value, report)));
    });
}

} // extern "C"
