#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cycpath {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p", "p/q" or "-p/q" into a canonical rational. Throws
/// Error{ParseError} on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer factorial(std::size_t n);
Integer binomial(std::size_t n, std::size_t k);

/// Catalan numbers with C_0 = C_1 = 1, C_2 = 2, C_3 = 5.
Integer catalan(std::size_t m);

}  // namespace cycpath
