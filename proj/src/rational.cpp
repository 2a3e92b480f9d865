#include "orchard/rational.hpp"

#include "orchard/error.hpp"

namespace orchard {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0)
        throw OrchardError(ErrorCode::input, "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat make_rat(long num, long den) {
    return make_rat(Int(num), Int(den));
}

Rat parse_rat(const std::string& token) {
    if (token.empty())
        throw OrchardError(ErrorCode::input, "empty rational token");
    const auto slash = token.find('/');
    try {
        if (slash == std::string::npos) {
            Int num(token);
            return Rat(num);
        }
        Int num(token.substr(0, slash));
        Int den(token.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw OrchardError(ErrorCode::input, "malformed rational '" + token + "'");
    }
}

std::string format_rat(const Rat& value) {
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string decimal_string(const Rat& value, int places) {
    Int pow10 = 1;
    for (int i = 0; i < places; ++i)
        pow10 *= 10;
    // floor(v * 10^places + 1/2), exact
    Rat scaled = value * Rat(pow10) + Rat(1, 2);
    Int units;
    mpz_fdiv_q(units.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());

    bool negative = units < 0;
    Int mag = abs(units);
    Int whole = mag / pow10;
    Int frac = mag % pow10;

    std::string out = whole.get_str();
    if (frac != 0) {
        std::string digits = frac.get_str();
        digits.insert(digits.begin(), static_cast<size_t>(places) - digits.size(), '0');
        while (!digits.empty() && digits.back() == '0')
            digits.pop_back();
        out += "." + digits;
    }
    if (negative && (whole != 0 || frac != 0))
        out.insert(out.begin(), '-');
    return out;
}

std::string format_point(const std::vector<Rat>& coords) {
    std::string out;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i)
            out += ' ';
        out += format_rat(coords[i]);
    }
    return out;
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::input: return "input_error";
    case ErrorCode::not_generic: return "not_generic";
    case ErrorCode::parity_unsupported: return "parity_unsupported";
    case ErrorCode::retry_exhausted: return "retry_exhausted";
    case ErrorCode::io: return "io_error";
    case ErrorCode::internal: return "internal_error";
    }
    return "unknown";
}

nlohmann::json OrchardError::to_json() const {
    nlohmann::json err{{"code", error_code_name(code_)}, {"message", what()}};
    if (!details_.is_null())
        err["details"] = details_;
    return nlohmann::json{{"error", err}};
}

} // namespace orchard
