#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dmp {

// Every count in the library is an Integer, even where a machine word would do.
using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& value);

// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Accepts the output of to_string(Rational). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace dmp
