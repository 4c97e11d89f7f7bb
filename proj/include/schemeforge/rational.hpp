#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace schemeforge {

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator, and zero as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical num/den. Throws PreconditionError when den is zero.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// Parses "7", "-3/9", "0.25", "-.5", "+2.". Decimals are converted exactly.
/// Returns false on anything else; `out` is untouched in that case.
bool try_parse_rational(std::string_view token, Rational& out);

/// Same as try_parse_rational but throws PreconditionError.
Rational parse_rational(std::string_view token);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace schemeforge
