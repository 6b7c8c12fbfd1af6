#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace outer {

using Rational = mpq_class;

/// Exact "p/q" form; integers are written as "p/1".
std::string to_string(const Rational& q);

/// Accepts "p/q", "p" or a plain decimal integer with sign.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

}  // namespace outer
