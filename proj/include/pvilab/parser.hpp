#pragma once

#include <string>

#include "pvilab/ratexpr.hpp"

namespace pvilab {

// Arithmetic expressions over the variable tower: integers, + - * / ^ and
// parentheses, e.g. "s*(s-1)*((2*a-1)*s + a^3*(a-2))". Exponents are
// nonnegative integer literals. Multiplication is always explicit.
RatExpr parse_ratexpr(const std::string& text);

// Same grammar, but the result must be a polynomial up to a rational
// constant denominator (which is folded into the coefficients).
Poly parse_poly(const std::string& text);

}  // namespace pvilab
