#include "orchard/families.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "orchard/combinatorics.hpp"
#include "orchard/error.hpp"

namespace orchard {

Rat Polynomial::eval(const Point& p) const {
    if (static_cast<int>(p.size()) != vars)
        throw OrchardError(ErrorCode::input, "polynomial arity mismatch");
    Rat total = 0;
    for (const auto& term : terms) {
        Rat v = term.coeff;
        for (int i = 0; i < vars; ++i)
            for (unsigned e = 0; e < term.exps[static_cast<size_t>(i)]; ++e)
                v *= p[static_cast<size_t>(i)];
        total += v;
    }
    return total;
}

bool Polynomial::vanishes_at_origin() const {
    Rat constant = 0;
    for (const auto& term : terms)
        if (std::all_of(term.exps.begin(), term.exps.end(), [](unsigned e) { return e == 0; }))
            constant += term.coeff;
    return constant == 0;
}

std::string Polynomial::to_string() const {
    if (terms.empty())
        return "0";
    std::string out;
    for (size_t t = 0; t < terms.size(); ++t) {
        const auto& term = terms[t];
        std::string mono;
        for (int i = 0; i < vars; ++i) {
            const unsigned e = term.exps[static_cast<size_t>(i)];
            if (e == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e > 1)
                mono += "^" + std::to_string(e);
        }
        Rat c = term.coeff;
        std::string lead;
        if (t == 0)
            lead = (c < 0) ? "-" : "";
        else
            lead = (c < 0) ? " - " : " + ";
        c = abs(c);
        std::string body;
        if (mono.empty())
            body = format_rat(c);
        else if (c == 1)
            body = mono;
        else
            body = format_rat(c) + "*" + mono;
        out += lead + body;
    }
    return out;
}

namespace {

struct PolyParser {
    std::string text;
    size_t pos = 0;
    int vars;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw OrchardError(ErrorCode::input,
                           "polynomial parse error at offset " + std::to_string(pos) + ": " + what);
    }

    long number() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            fail("expected a number");
        return std::stol(text.substr(start, pos - start));
    }

    Rat coefficient() {
        const long num = number();
        if (eat('/'))
            return make_rat(num, number());
        return Rat(num);
    }

    // term := [coeff] {'*'? var} ; var := x<i> ['^' exp]
    Polynomial::Term term() {
        Polynomial::Term t;
        t.coeff = 1;
        t.exps.assign(static_cast<size_t>(vars), 0);
        bool saw_anything = false;
        skip_ws();
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            t.coeff = coefficient();
            saw_anything = true;
        }
        while (true) {
            skip_ws();
            const size_t before = pos;
            if (eat('*'))
                skip_ws();
            if (pos < text.size() && text[pos] == 'x') {
                ++pos;
                const long idx = number();
                if (idx < 1 || idx > vars)
                    fail("variable x" + std::to_string(idx) + " out of range");
                unsigned e = 1;
                if (eat('^'))
                    e = static_cast<unsigned>(number());
                t.exps[static_cast<size_t>(idx - 1)] += e;
                saw_anything = true;
            } else {
                pos = before;
                break;
            }
        }
        if (!saw_anything)
            fail("expected a term");
        return t;
    }

    Polynomial parse() {
        Polynomial p;
        p.vars = vars;
        bool negate = eat('-');
        if (!negate)
            eat('+');
        while (true) {
            Polynomial::Term t = term();
            if (negate)
                t.coeff = -t.coeff;
            p.terms.push_back(std::move(t));
            skip_ws();
            if (eat('+'))
                negate = false;
            else if (eat('-'))
                negate = true;
            else
                break;
        }
        skip_ws();
        if (pos != text.size())
            fail("trailing input");
        return p;
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, int vars) {
    PolyParser parser{text, 0, vars};
    return parser.parse();
}

namespace {

Polynomial monomial(int vars, int var_index, unsigned exp) {
    Polynomial p;
    p.vars = vars;
    Polynomial::Term t;
    t.coeff = 1;
    t.exps.assign(static_cast<size_t>(vars), 0);
    t.exps[static_cast<size_t>(var_index)] = exp;
    p.terms.push_back(std::move(t));
    return p;
}

} // namespace

FunctionFamily affine_family(int d) {
    if (d < 1)
        throw OrchardError(ErrorCode::input, "affine family needs d >= 1");
    FunctionFamily f{"affine", d, d, {}};
    for (int i = 0; i < d; ++i)
        f.basis.push_back(monomial(d, i, 1));
    return f;
}

FunctionFamily circles_family() {
    FunctionFamily f{"circles", 2, 3, {}};
    f.basis.push_back(monomial(2, 0, 1));
    f.basis.push_back(monomial(2, 1, 1));
    Polynomial r2 = monomial(2, 0, 2);
    r2.terms.push_back(monomial(2, 1, 2).terms[0]);
    f.basis.push_back(std::move(r2));
    return f;
}

FunctionFamily conics_family() {
    FunctionFamily f{"conics", 2, 5, {}};
    f.basis.push_back(monomial(2, 0, 1));
    f.basis.push_back(monomial(2, 1, 1));
    f.basis.push_back(monomial(2, 0, 2));
    Polynomial xy = monomial(2, 0, 1);
    xy.terms[0].exps[1] = 1;
    f.basis.push_back(std::move(xy));
    f.basis.push_back(monomial(2, 1, 2));
    return f;
}

FunctionFamily interpolation_family(int d) {
    if (d < 2)
        throw OrchardError(ErrorCode::input, "interpolation family needs d >= 2");
    FunctionFamily f{"interpolation", 2, d, {}};
    for (int e = 1; e < d; ++e)
        f.basis.push_back(monomial(2, 0, static_cast<unsigned>(e)));
    f.basis.push_back(monomial(2, 1, 1));
    return f;
}

FunctionFamily custom_family(int k, std::vector<Polynomial> basis) {
    if (k < 1 || basis.empty())
        throw OrchardError(ErrorCode::input, "custom family needs k >= 1 and a nonempty basis");
    for (const auto& b : basis) {
        if (b.vars != k)
            throw OrchardError(ErrorCode::input, "basis polynomial arity mismatch");
        if (!b.vanishes_at_origin())
            throw OrchardError(ErrorCode::input,
                               "basis polynomial '" + b.to_string() + "' must vanish at the origin");
    }
    FunctionFamily f{"custom", k, static_cast<int>(basis.size()), std::move(basis)};
    return f;
}

namespace {

std::string strip_comment(std::string line) {
    const auto hash = line.find('#');
    if (hash != std::string::npos)
        line.erase(hash);
    return line;
}

} // namespace

GeneralizedConfiguration parse_gconfig(const std::string& text) {
    std::istringstream lines(text);
    std::string header;
    while (std::getline(lines, header)) {
        header = strip_comment(header);
        if (header.find_first_not_of(" \t\r") != std::string::npos)
            break;
    }
    std::istringstream head(header);
    std::string keyword;
    head >> keyword;
    if (keyword != "family")
        throw OrchardError(ErrorCode::input, "generalized configuration must start with 'family ...'");
    std::string name;
    head >> name;
    std::string rest;
    std::getline(head, rest);

    std::string body;
    {
        std::ostringstream buf;
        buf << lines.rdbuf();
        body = buf.str();
    }
    std::istringstream body_stream(body);
    std::vector<std::string> tokens;
    {
        std::string line;
        while (std::getline(body_stream, line)) {
            line = strip_comment(line);
            std::istringstream words(line);
            std::string w;
            while (words >> w)
                tokens.push_back(w);
        }
    }
    if (tokens.size() < 2)
        throw OrchardError(ErrorCode::input, "expected 'k n' after the family header");
    const int k = std::stoi(tokens[0]);
    const int n = std::stoi(tokens[1]);
    if (k < 1 || n < 0)
        throw OrchardError(ErrorCode::input, "bad k or n in generalized configuration");

    FunctionFamily family;
    if (name == "affine") {
        family = affine_family(k);
    } else if (name == "circles") {
        family = circles_family();
    } else if (name == "conics") {
        family = conics_family();
    } else if (name == "interpolation") {
        std::istringstream params(rest);
        int d = 0;
        if (!(params >> d))
            throw OrchardError(ErrorCode::input, "interpolation family needs a degree parameter");
        family = interpolation_family(d);
    } else if (name == "custom") {
        std::vector<Polynomial> basis;
        std::string piece;
        std::istringstream params(rest);
        while (std::getline(params, piece, ';')) {
            if (piece.find_first_not_of(" \t") == std::string::npos)
                continue;
            basis.push_back(parse_polynomial(piece, k));
        }
        family = custom_family(k, std::move(basis));
    } else {
        throw OrchardError(ErrorCode::input, "unknown family '" + name + "'");
    }
    if (family.source_dim != k)
        throw OrchardError(ErrorCode::input,
                           "family '" + name + "' expects k=" + std::to_string(family.source_dim) +
                               ", file says k=" + std::to_string(k));

    if (tokens.size() != 2 + static_cast<size_t>(k) * static_cast<size_t>(n))
        throw OrchardError(ErrorCode::input, "wrong number of coordinates in generalized configuration");
    GeneralizedConfiguration gcfg;
    gcfg.family = std::move(family);
    gcfg.points.resize(static_cast<size_t>(n));
    size_t t = 2;
    for (auto& p : gcfg.points) {
        p.resize(static_cast<size_t>(k));
        for (auto& c : p)
            c = parse_rat(tokens[t++]);
    }
    return gcfg;
}

GeneralizedConfiguration read_gconfig(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw OrchardError(ErrorCode::io, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_gconfig(buf.str());
}

std::string format_gconfig(const GeneralizedConfiguration& gcfg) {
    std::string header = "family " + gcfg.family.name;
    if (gcfg.family.name == "interpolation")
        header += " " + std::to_string(gcfg.family.sep_dim);
    if (gcfg.family.name == "custom") {
        for (size_t i = 0; i < gcfg.family.basis.size(); ++i)
            header += (i ? "; " : " ") + gcfg.family.basis[i].to_string();
    }
    std::string out = header + "\n" + std::to_string(gcfg.family.source_dim) + " " +
                      std::to_string(gcfg.size()) + "\n";
    for (const auto& p : gcfg.points)
        out += format_point(p) + "\n";
    return out;
}

Configuration veronese_image(const GeneralizedConfiguration& gcfg) {
    Configuration img;
    img.dim = gcfg.family.sep_dim;
    img.points.reserve(gcfg.points.size());
    for (const auto& p : gcfg.points) {
        Point q(static_cast<size_t>(img.dim));
        for (int b = 0; b < img.dim; ++b)
            q[static_cast<size_t>(b)] = gcfg.family.basis[static_cast<size_t>(b)].eval(p);
        img.points.push_back(std::move(q));
    }
    return img;
}

bool c_generic(const GeneralizedConfiguration& gcfg) {
    return is_generic(veronese_image(gcfg));
}

void require_c_generic(const GeneralizedConfiguration& gcfg) {
    auto bad = genericity_violation(veronese_image(gcfg));
    if (bad)
        throw OrchardError(ErrorCode::not_generic, "points are not C-generic for this family",
                           nlohmann::json{{"subset", *bad}, {"family", gcfg.family.name}});
}

namespace {

// Nonzero functional in I(S): kernel vector of the d x (d+1) evaluation
// matrix rows (1, b_1(P_s), ..., b_d(P_s)), via signed maximal minors.
// All minors zero means dim I(S) > 1, which we reject as non-C-generic.
std::vector<Rat> vanishing_functional(const GeneralizedConfiguration& gcfg,
                                      const std::vector<int>& subset) {
    const int d = gcfg.family.sep_dim;
    std::vector<std::vector<Rat>> m(static_cast<size_t>(d),
                                    std::vector<Rat>(static_cast<size_t>(d) + 1));
    for (int r = 0; r < d; ++r) {
        const Point& p = gcfg.points[static_cast<size_t>(subset[static_cast<size_t>(r)] - 1)];
        m[static_cast<size_t>(r)][0] = 1;
        for (int b = 0; b < d; ++b)
            m[static_cast<size_t>(r)][static_cast<size_t>(b) + 1] =
                gcfg.family.basis[static_cast<size_t>(b)].eval(p);
    }
    std::vector<Rat> kernel(static_cast<size_t>(d) + 1);
    bool nonzero = false;
    for (int drop = 0; drop <= d; ++drop) {
        std::vector<std::vector<Rat>> minor(static_cast<size_t>(d),
                                            std::vector<Rat>(static_cast<size_t>(d)));
        for (int r = 0; r < d; ++r) {
            int c = 0;
            for (int j = 0; j <= d; ++j) {
                if (j == drop)
                    continue;
                minor[static_cast<size_t>(r)][static_cast<size_t>(c++)] =
                    m[static_cast<size_t>(r)][static_cast<size_t>(j)];
            }
        }
        Rat v = det_value(minor);
        if (drop % 2 == 1)
            v = -v;
        if (v != 0)
            nonzero = true;
        kernel[static_cast<size_t>(drop)] = std::move(v);
    }
    if (!nonzero)
        throw OrchardError(ErrorCode::not_generic,
                           "vanishing space I(S) has dimension > 1; input is not C-generic",
                           nlohmann::json{{"subset", subset}, {"family", gcfg.family.name}});
    return kernel;
}

Rat apply_functional(const GeneralizedConfiguration& gcfg, const std::vector<Rat>& functional,
                     int label) {
    const Point& p = gcfg.points[static_cast<size_t>(label - 1)];
    Rat v = functional[0];
    for (int b = 0; b < gcfg.family.sep_dim; ++b)
        v += functional[static_cast<size_t>(b) + 1] *
             gcfg.family.basis[static_cast<size_t>(b)].eval(p);
    return v;
}

} // namespace

bool c_subset_separates(const GeneralizedConfiguration& gcfg, const std::vector<int>& subset,
                        int i, int j, CountRoute route) {
    if (route == CountRoute::direct) {
        const auto f = vanishing_functional(gcfg, subset);
        return sign_of(apply_functional(gcfg, f, i)) * sign_of(apply_functional(gcfg, f, j)) ==
               Sign::minus;
    }
    const Configuration img = veronese_image(gcfg);
    std::vector<Point> s;
    s.reserve(subset.size());
    for (int label : subset)
        s.push_back(img.point(label));
    return det_sign(s, img.point(i)) * det_sign(s, img.point(j)) == Sign::minus;
}

long c_separating_count(const GeneralizedConfiguration& gcfg, int i, int j, CountRoute route) {
    const int n = gcfg.size();
    if (i < 1 || i > n || j < 1 || j > n || i == j)
        throw OrchardError(ErrorCode::input, "bad pair for c_separating_count");
    require_c_generic(gcfg);
    if (route == CountRoute::image) {
        return separating_count(veronese_image(gcfg), i, j).count;
    }
    long count = 0;
    std::vector<int> pool;
    for (int k = 1; k <= n; ++k)
        if (k != i && k != j)
            pool.push_back(k);
    for_each_subset_of(pool, gcfg.family.sep_dim, [&](const std::vector<int>& subset) {
        const auto f = vanishing_functional(gcfg, subset);
        if (sign_of(apply_functional(gcfg, f, i)) * sign_of(apply_functional(gcfg, f, j)) ==
            Sign::minus)
            ++count;
    });
    return count;
}

bool c_orchard_related(const GeneralizedConfiguration& gcfg, int i, int j, CountRoute route) {
    if (i == j)
        return true;
    const long count = c_separating_count(gcfg, i, j, route);
    return (count % 2 != 0) == binom_odd(gcfg.size() - 3, gcfg.family.sep_dim - 1);
}

OrchardPartition c_orchard_partition(const GeneralizedConfiguration& gcfg) {
    require_c_generic(gcfg);
    const OrchardPartition part =
        orchard_partition(veronese_image(gcfg), PartitionMethod::anchor).partition;
    // cross-check the image result against direct function-space counting
    for (int i = 2; i <= gcfg.size(); ++i)
        if (c_orchard_related(gcfg, 1, i, CountRoute::direct) != part.same_class(1, i))
            throw_internal("direct and image C-separation counts disagree");
    return part;
}

Configuration inverse_stereographic(const Configuration& plane) {
    if (plane.dim != 2)
        throw OrchardError(ErrorCode::input, "inverse stereographic lift needs plane points");
    Configuration sphere;
    sphere.dim = 3;
    sphere.points.reserve(plane.points.size());
    for (const auto& p : plane.points) {
        const Rat r2 = p[0] * p[0] + p[1] * p[1];
        const Rat denom = r2 + 1;
        sphere.points.push_back(
            {Rat(2 * p[0] / denom), Rat(2 * p[1] / denom), Rat((r2 - 1) / denom)});
    }
    return sphere;
}

} // namespace orchard
