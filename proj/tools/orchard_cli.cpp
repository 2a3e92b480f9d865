// orchard command line tool. Talks to the library exclusively through the
// C API so it exercises the same surface other language bindings would.

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orchard/orchard_c.h"

namespace {

struct Options {
    std::string format = "json"; // json | plain
};

// Renders a JSON document as flat "key: value" lines for --format plain.
void plain_walk(const nlohmann::json& value, const std::string& prefix, std::string& out) {
    if (value.is_object()) {
        for (const auto& [key, child] : value.items())
            plain_walk(child, prefix.empty() ? key : prefix + "." + key, out);
        return;
    }
    if (value.is_array()) {
        bool scalars = true;
        for (const auto& v : value)
            scalars = scalars && !v.is_object() && !v.is_array();
        if (scalars) {
            std::string joined;
            for (const auto& v : value)
                joined += (joined.empty() ? "" : " ") +
                          (v.is_string() ? v.get<std::string>() : v.dump());
            out += prefix + ": " + joined + "\n";
            return;
        }
        for (size_t i = 0; i < value.size(); ++i)
            plain_walk(value[i], prefix + "[" + std::to_string(i) + "]", out);
        return;
    }
    out += prefix + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
}

void emit(const Options& opts, const std::string& json_doc) {
    if (opts.format == "plain") {
        std::string out;
        plain_walk(nlohmann::json::parse(json_doc), "", out);
        std::cout << out;
        return;
    }
    std::cout << json_doc;
}

// Domain failures print the machine-readable error object and exit 1.
int fail_domain(const Options& opts) {
    emit(opts, std::string(orc_last_error()) + "\n");
    return 1;
}

class StringGuard {
public:
    ~StringGuard() { orc_string_free(value); }
    char* value = nullptr;
};

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        throw CLI::ValidationError("input", "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <typename Handle, typename ParseFn, typename FreeFn>
class Loaded {
public:
    Loaded(const std::string& path, ParseFn parse, FreeFn free_fn) : free_(free_fn) {
        status_ = parse(read_source(path).c_str(), &handle_);
    }
    ~Loaded() {
        if (handle_)
            free_(handle_);
    }
    orc_status status() const { return status_; }
    Handle* get() const { return handle_; }

private:
    Handle* handle_ = nullptr;
    orc_status status_ = ORC_OK;
    FreeFn free_;
};

// The file kind is sniffed from the first word so `check` accepts every
// supported format.
std::string sniff_kind(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream words(line);
        std::string first;
        if (words >> first) {
            if (first == "proj" || first == "sphere")
                return "homogeneous";
            if (first == "wiring")
                return "wiring";
            if (first == "family")
                return "family";
            return "affine";
        }
    }
    return "affine";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact orchard partitions of generic point configurations"};
    app.require_subcommand(1);
    Options opts;
    app.add_option("--format", opts.format, "output format: json or plain")
        ->check(CLI::IsMember({"json", "plain"}))
        ->capture_default_str();

    std::string input;
    std::string method = "all_pairs";
    std::string mode = "respect";
    std::string out_path;
    unsigned long long seed = 0;
    int retries = 1000;
    int pair_i = 0, pair_j = 0;
    bool invariants = false;
    std::vector<int> flipset;
    int mover = 0;
    int n = 0, d = 1, trials = 5, steps = 50;
    int position = 0;

    auto* check = app.add_subcommand("check", "validate an input file (any supported format)");
    check->add_option("input", input, "input file (or - for stdin)")->required();

    auto* partition = app.add_subcommand("partition", "two-class partition of a point file");
    partition->add_option("input", input)->required();
    partition->add_option("--method", method, "all_pairs or anchor")
        ->check(CLI::IsMember({"all_pairs", "anchor"}));
    partition->add_option("--pair", [&pair_i, &pair_j](const std::vector<std::string>& vals) {
        pair_i = std::stoi(vals.at(0));
        pair_j = std::stoi(vals.at(1));
        return true;
    }, "also report the separation count for a pair")->expected(2);
    partition->add_flag("--invariants", invariants, "include the phi/omega sign data");
    bool stats = false;
    partition->add_flag("--stats", stats, "include the instrumented predicate count");

    auto* tree = app.add_subcommand("tree", "recursive partition tree of a point file");
    tree->add_option("input", input)->required();

    auto* flip = app.add_subcommand("flip", "apply a flip and verify its locality");
    flip->add_option("input", input)->required();
    flip->add_option("--flipset", flipset, "d+1 labels")->required()->delimiter(',');
    flip->add_option("--mover", mover, "label that crosses the hyperplane")->required();

    auto* parity = app.add_subcommand("parity", "flip-walk class-size parity experiment");
    parity->add_option("--n", n, "points per configuration")->required();
    parity->add_option("--d", d, "dimension")->required();
    parity->add_option("--trials", trials)->capture_default_str();
    parity->add_option("--steps", steps, "flips per walk")->capture_default_str();
    parity->add_option("--seed", seed)->capture_default_str();

    auto* family = app.add_subcommand("family", "partition for a function-family file");
    family->add_option("input", input)->required();

    auto* sphere = app.add_subcommand("sphere", "signed partition of an antipodal sphere file");
    sphere->add_option("input", input)->required();
    sphere->add_option("--seed", seed)->capture_default_str();
    sphere->add_option("--retries", retries)->capture_default_str();

    auto* projective = app.add_subcommand("projective", "partition of a projective file");
    projective->add_option("input", input)->required();
    projective->add_option("--seed", seed)->capture_default_str();
    projective->add_option("--retries", retries)->capture_default_str();

    auto* gamma = app.add_subcommand("gamma", "odd-parity edge graph and triangle homology");
    gamma->add_option("input", input)->required();
    gamma->add_option("--seed", seed)->capture_default_str();
    gamma->add_option("--retries", retries)->capture_default_str();

    auto* wiring = app.add_subcommand("wiring", "analyze a wiring diagram");
    wiring->add_option("input", input)->required();
    wiring->add_option("--pair", [&pair_i, &pair_j](const std::vector<std::string>& vals) {
        pair_i = std::stoi(vals.at(0));
        pair_j = std::stoi(vals.at(1));
        return true;
    }, "report the digon counts of a wire pair")->expected(2);
    wiring->add_option("--move", position, "apply the triangle move at this word position");
    std::string desing;
    wiring->add_option("--desingularize", desing, "smooth all crossings: respect or oppose")
        ->check(CLI::IsMember({"respect", "oppose"}));

    auto* dualize = app.add_subcommand("dualize", "wiring diagram of the dual line arrangement");
    dualize->add_option("input", input)->required();
    dualize->add_option("--seed", seed)->capture_default_str();
    dualize->add_option("--retries", retries)->capture_default_str();

    auto* plot = app.add_subcommand("plot", "SVG rendering of a plane configuration");
    plot->add_option("input", input)->required();
    plot->add_option("output", out_path, "output file (- for stdout)")->required();
    plot->add_option("--pair", [&pair_i, &pair_j](const std::vector<std::string>& vals) {
        pair_i = std::stoi(vals.at(0));
        pair_j = std::stoi(vals.at(1));
        return true;
    }, "overlay the separating lines of a pair")->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors exit 2
    }

    (void)mode;
    try {
        if (check->parsed()) {
            const std::string text = read_source(input);
            const std::string kind = sniff_kind(text);
            StringGuard out;
            orc_status st = ORC_ERR_INPUT;
            if (kind == "homogeneous") {
                orc_hconfig* h = nullptr;
                st = orc_hconfig_parse(text.c_str(), &h);
                if (st == ORC_OK) {
                    st = orc_hcheck_json(h, &out.value);
                    orc_hconfig_free(h);
                }
            } else if (kind == "wiring") {
                orc_wiring* w = nullptr;
                st = orc_wiring_parse(text.c_str(), &w);
                if (st == ORC_OK) {
                    st = orc_wiring_check_json(w, &out.value);
                    orc_wiring_free(w);
                }
            } else if (kind == "family") {
                orc_gconfig* g = nullptr;
                st = orc_gconfig_parse(text.c_str(), &g);
                if (st == ORC_OK) {
                    st = orc_gcheck_json(g, &out.value);
                    orc_gconfig_free(g);
                }
            } else {
                orc_config* c = nullptr;
                st = orc_config_parse(text.c_str(), &c);
                if (st == ORC_OK) {
                    st = orc_check_json(c, &out.value);
                    orc_config_free(c);
                }
            }
            if (st != ORC_OK)
                return fail_domain(opts);
            emit(opts, out.value);
            return 0;
        }

        if (partition->parsed() || tree->parsed() || flip->parsed() || dualize->parsed() ||
            plot->parsed()) {
            Loaded<orc_config, decltype(&orc_config_parse), decltype(&orc_config_free)> cfg(
                input, &orc_config_parse, &orc_config_free);
            if (cfg.status() != ORC_OK)
                return fail_domain(opts);
            StringGuard out;
            orc_status st = ORC_OK;
            if (partition->parsed())
                st = orc_partition_json(cfg.get(), method.c_str(), invariants ? 1 : 0, pair_i,
                                        pair_j, stats ? 1 : 0, &out.value);
            else if (tree->parsed())
                st = orc_tree_json(cfg.get(), &out.value);
            else if (flip->parsed())
                st = orc_flip_json(cfg.get(), flipset.data(), static_cast<int>(flipset.size()),
                                   mover, &out.value);
            else if (dualize->parsed())
                st = orc_dualize_json(cfg.get(), seed, retries, &out.value);
            else
                st = orc_render_svg(cfg.get(), pair_i, pair_j, &out.value);
            if (st != ORC_OK)
                return fail_domain(opts);
            if (plot->parsed()) {
                if (out_path == "-") {
                    std::cout << out.value;
                } else {
                    std::ofstream svg(out_path, std::ios::binary);
                    if (!svg) {
                        std::cerr << "cannot write '" << out_path << "'\n";
                        return 1;
                    }
                    svg << out.value;
                }
                return 0;
            }
            emit(opts, out.value);
            return 0;
        }

        if (parity->parsed()) {
            StringGuard out;
            if (orc_parity_json(n, d, trials, steps, seed, &out.value) != ORC_OK)
                return fail_domain(opts);
            emit(opts, out.value);
            return 0;
        }

        if (family->parsed()) {
            Loaded<orc_gconfig, decltype(&orc_gconfig_parse), decltype(&orc_gconfig_free)> gcfg(
                input, &orc_gconfig_parse, &orc_gconfig_free);
            if (gcfg.status() != ORC_OK)
                return fail_domain(opts);
            StringGuard out;
            if (orc_family_json(gcfg.get(), &out.value) != ORC_OK)
                return fail_domain(opts);
            emit(opts, out.value);
            return 0;
        }

        if (sphere->parsed() || projective->parsed() || gamma->parsed()) {
            Loaded<orc_hconfig, decltype(&orc_hconfig_parse), decltype(&orc_hconfig_free)> hcfg(
                input, &orc_hconfig_parse, &orc_hconfig_free);
            if (hcfg.status() != ORC_OK)
                return fail_domain(opts);
            StringGuard out;
            orc_status st;
            if (sphere->parsed())
                st = orc_spherical_json(hcfg.get(), seed, retries, &out.value);
            else if (projective->parsed())
                st = orc_projective_json(hcfg.get(), seed, retries, &out.value);
            else
                st = orc_gamma_json(hcfg.get(), seed, retries, &out.value);
            if (st != ORC_OK)
                return fail_domain(opts);
            emit(opts, out.value);
            return 0;
        }

        if (wiring->parsed()) {
            Loaded<orc_wiring, decltype(&orc_wiring_parse), decltype(&orc_wiring_free)> wd(
                input, &orc_wiring_parse, &orc_wiring_free);
            if (wd.status() != ORC_OK)
                return fail_domain(opts);
            StringGuard out;
            orc_status st;
            if (pair_i > 0 && pair_j > 0)
                st = orc_wiring_digon_json(wd.get(), pair_i, pair_j, &out.value);
            else if (position > 0)
                st = orc_wiring_move_json(wd.get(), position, &out.value);
            else if (!desing.empty())
                st = orc_wiring_desing_json(wd.get(), desing.c_str(), &out.value);
            else
                st = orc_wiring_report_json(wd.get(), &out.value);
            if (st != ORC_OK)
                return fail_domain(opts);
            emit(opts, out.value);
            return 0;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
