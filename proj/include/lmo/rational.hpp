#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lmo {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

}  // namespace lmo
