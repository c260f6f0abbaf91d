#ifndef QLOOP_RATIONAL_HPP
#define QLOOP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace qloop {

// Exact rational scalar. Canonical form (gcd(num,den)=1, den>0) is maintained
// by all arithmetic; parse_rational canonicalizes its result.
using Rational = mpq_class;

// Accepts "p/q", a plain integer, or a decimal literal ("0.25" -> 1/4).
// Throws std::domain_error on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

// Exact conversion of a finite double to a rational (binary expansion).
Rational rational_from_double(double x);

}  // namespace qloop

#endif
