#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace orchard {

// Exact rational scalar. mpq_class keeps the canonical form we rely on:
// denominator > 0 and gcd(|num|, den) = 1 after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

/// Build a rational from integer numerator/denominator, canonicalized.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

/// Parse "p", "-p", or "p/q" (q != 0). Throws OrchardError(input) otherwise.
Rat parse_rat(const std::string& token);

/// Canonical text form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string format_rat(const Rat& value);

/// Exact decimal rendering, round-half-up at `places` digits, trailing
/// zeros (and a bare trailing point) stripped. Used by the SVG emitter.
std::string decimal_string(const Rat& value, int places);

std::string format_point(const std::vector<Rat>& coords);

} // namespace orchard
