#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lopq {

/// Exact rational of unbounded size. GMP returns every arithmetic result in
/// canonical form (reduced, positive denominator); values built from raw
/// numerator/denominator pairs go through make_scalar() to stay canonical.
using Scalar = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error when den == 0.
Scalar make_scalar(long num, long den = 1);

/// Parses "±num/den" or "±num" (decimal digits only, no whitespace, no
/// decimal point). Throws std::invalid_argument on malformed input and on a
/// zero denominator.
Scalar parse_scalar(std::string_view text);

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Scalar& value);

/// base^exponent for any integer exponent; base must be nonzero when the
/// exponent is negative.
Scalar pow(const Scalar& base, long exponent);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

}  // namespace lopq
