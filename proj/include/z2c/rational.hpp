#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace z2c {

using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q"; throws ParseError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" form.
std::string to_string(const Rational& value);

bool is_zero(const RatVector& v);

}  // namespace z2c
