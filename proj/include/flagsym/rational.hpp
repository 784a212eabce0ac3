#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace flagsym {

// All metric arithmetic runs over exact rationals; no floating point.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds a canonicalized rational num/den. Throws on den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "p/q" or "p" (optional sign, arbitrary precision).
Rational rational_from_string(const std::string& text);

/// Renders canonically: integers without "/1", otherwise "p/q".
std::string rational_to_string(const Rational& value);

/// Smallest positive integer multiple of the vector (clears denominators,
/// divides by the common numerator gcd). Zero vector maps to itself.
std::vector<Integer> scale_to_integers(const std::vector<Rational>& values);

}  // namespace flagsym
