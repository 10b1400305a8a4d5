#ifndef FRESCO_RATIONAL_HPP
#define FRESCO_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace fresco
{

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q", "p" or "-p/q". Throws Error(InvalidInput) on garbage or a
// zero denominator. The result is canonicalized.
Rational parse_rational(const std::string &text);

// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational &q);

// Reduced representative of q modulo 1 in (0, 1].
Rational exponent_class_of(const Rational &q);

} // namespace fresco

#endif
