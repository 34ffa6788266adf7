#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eao {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// Parses "num/den" or "num". Throws Error(malformed_input) on bad text or a
/// zero denominator. The result is canonical.
Rational parse_rational(std::string_view text);

/// Canonical text form: "-3/7", "5", "0".
std::string format_rational(const Rational& value);

/// max |x| helper used by convergence measures.
inline Rational abs_value(const Rational& value) { return abs(value); }

}  // namespace eao
