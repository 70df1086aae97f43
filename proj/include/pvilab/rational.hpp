#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "pvilab/error.hpp"

namespace pvilab {

// Exact arbitrary-precision rational. GMP keeps the invariants we need:
// gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "-27/5", "27", "−27/5" (unicode minus), with optional spaces.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

// gcd(p1/q1, p2/q2) = gcd(p1,p2)/lcm(q1,q2), nonnegative; gcd(0,0) = 0.
Rational rational_gcd(const Rational& x, const Rational& y);

// Exact square root when the value is a perfect square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace pvilab
