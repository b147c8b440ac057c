#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace gvkit {

/// Exact rational number. Arithmetic keeps values canonical (lowest terms,
/// positive denominator); the two-argument mpq_class constructor does not, so
/// build fractions with ratio().
using Rational = mpq_class;
using Integer = mpz_class;

/// "num/den" with decimal digits; the denominator is always written.
std::string to_string(const Rational &r);

/// Accepts "num/den" or a bare integer "num".
Rational parse_rational(std::string_view text);

/// num/den in lowest terms.
Rational ratio(long num, long den);

bool is_integer(const Rational &r);

/// The value as a machine integer when it is integral and fits.
std::optional<long> to_long(const Rational &r);

Rational binomial(long n, long k);

} // namespace gvkit
