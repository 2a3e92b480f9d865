#include "orchard/config.hpp"

#include <fstream>
#include <sstream>

#include "orchard/error.hpp"

namespace orchard {

Configuration Configuration::induced(const std::vector<int>& labels) const {
    Configuration sub;
    sub.dim = dim;
    sub.points.reserve(labels.size());
    for (int label : labels)
        sub.points.push_back(point(label));
    return sub;
}

namespace {

// Strips comments, returns whitespace-separated tokens.
std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream words(line);
        std::string word;
        while (words >> word)
            tokens.push_back(word);
    }
    return tokens;
}

long parse_count(const std::string& token, const char* what) {
    try {
        size_t pos = 0;
        long v = std::stol(token, &pos);
        if (pos != token.size())
            throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw OrchardError(ErrorCode::input, std::string("expected integer for ") + what +
                                                 ", got '" + token + "'");
    }
}

} // namespace

Configuration parse_configuration(const std::string& text) {
    const auto tokens = tokenize(text);
    if (tokens.size() < 2)
        throw OrchardError(ErrorCode::input, "configuration header 'd n' missing");
    const long d = parse_count(tokens[0], "dimension");
    const long n = parse_count(tokens[1], "point count");
    if (d < 1)
        throw OrchardError(ErrorCode::input, "dimension must be positive");
    if (n < 0)
        throw OrchardError(ErrorCode::input, "point count must be nonnegative");
    const size_t expected = 2 + static_cast<size_t>(d) * static_cast<size_t>(n);
    if (tokens.size() != expected)
        throw OrchardError(ErrorCode::input,
                           "expected " + std::to_string(expected - 2) + " coordinates, got " +
                               std::to_string(tokens.size() - 2));
    Configuration cfg;
    cfg.dim = static_cast<int>(d);
    cfg.points.resize(static_cast<size_t>(n));
    size_t t = 2;
    for (auto& p : cfg.points) {
        p.resize(static_cast<size_t>(d));
        for (auto& c : p)
            c = parse_rat(tokens[t++]);
    }
    return cfg;
}

Configuration read_configuration(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw OrchardError(ErrorCode::io, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_configuration(buf.str());
}

std::string format_configuration(const Configuration& cfg) {
    std::string out = std::to_string(cfg.dim) + " " + std::to_string(cfg.size()) + "\n";
    for (const auto& p : cfg.points)
        out += format_point(p) + "\n";
    return out;
}

void write_configuration(const Configuration& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw OrchardError(ErrorCode::io, "cannot write '" + path + "'");
    out << format_configuration(cfg);
}

} // namespace orchard
