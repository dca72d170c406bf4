#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace supergrading {

using Rational = mpq_class;

// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& r);

// Accepts "a", "a/b" and finite decimals such as "-0.5".
Rational parse_rational(std::string_view text);

// num/den in lowest terms; mpq_class(num, den) alone does not reduce.
Rational ratio(long num, long den);

bool is_integer(const Rational& r);
bool is_half_integer(const Rational& r);

// Precondition: is_integer(r) and the value fits in a long.
long to_long(const Rational& r);

}  // namespace supergrading
