#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace csitdof {

// Arbitrary-precision rational. All probabilities, DoF values and channel
// coefficients in this library are exact.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
// input or a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "p/q" rendering; integers render without a denominator.
std::string to_string(const Rational& value);

// Fixed-point rendering with `places` digits after the point (rounded half
// away from zero).
std::string to_decimal(const Rational& value, int places);

// Sum of 1/i for i in [from, to]; zero when from > to.
Rational harmonic_sum(unsigned from, unsigned to);

Rational dot(const RationalVector& a, const RationalVector& b);

std::string to_string(const RationalVector& values);

}  // namespace csitdof
