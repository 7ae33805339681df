#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pencil {

// mpq_class keeps values canonical (reduced, positive denominator) under all
// arithmetic; only construction from raw parts needs canonicalize().
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p" or "p/q" (optional leading '-'); no decimals, no spaces.
Rat parse_rat(std::string_view text);

/// Formats as "p" when the denominator is 1, else "p/q".
std::string format_rat(const Rat& r);

inline int sign(const Rat& r) { return sgn(r); }

double to_double(const Rat& r);

}  // namespace pencil
