#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace weylsnp {

/// Exact rational scalar. Values are kept canonical (reduced, positive denominator).
using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q". Throws ParseError on anything else, including q = 0.
Scalar parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& value);

double to_double(const Scalar& value);

/// Exact square root when `value` is the square of a rational.
bool rational_sqrt(const Scalar& value, Scalar& root);

}  // namespace weylsnp
