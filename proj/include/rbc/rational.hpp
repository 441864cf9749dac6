#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rbc {

using Rational = mpq_class;

// Parses "p/q" or "p" (optionally signed). Throws InputError on malformed
// text or a zero denominator. The result is canonical (lowest terms).
Rational parse_rational(std::string_view text);

// Canonical "p/q" text, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace rbc
