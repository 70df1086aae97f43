#pragma once

#include <map>
#include <string>

#include "pvilab/poly.hpp"

namespace pvilab {

// Normalized quotient of polynomials: gcd(num, den) = 1 and den has
// graded-lex leading coefficient 1, so representational equality is
// mathematical equality. All operations return normalized values.
class RatExpr {
  public:
    RatExpr() : num_(Poly::zero()), den_(Poly::constant(1)) {}
    RatExpr(const Poly& p) : num_(p), den_(Poly::constant(1)) {}
    RatExpr(const Rational& q) : num_(Poly::constant(q)), den_(Poly::constant(1)) {}

    static RatExpr make(const Poly& num, const Poly& den);
    static RatExpr variable(Var v) { return RatExpr(Poly::variable(v)); }
    static RatExpr constant(long c) { return RatExpr(rat(c)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;

    bool operator==(const RatExpr& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatExpr& o) const { return !(*this == o); }

    RatExpr operator-() const;
    RatExpr operator+(const RatExpr& o) const;
    RatExpr operator-(const RatExpr& o) const;
    RatExpr operator*(const RatExpr& o) const;
    RatExpr operator/(const RatExpr& o) const;
    RatExpr& operator+=(const RatExpr& o) { return *this = *this + o; }
    RatExpr& operator-=(const RatExpr& o) { return *this = *this - o; }
    RatExpr& operator*=(const RatExpr& o) { return *this = *this * o; }
    RatExpr& operator/=(const RatExpr& o) { return *this = *this / o; }

    RatExpr pow(int e) const;  // negative e inverts

    RatExpr derivative(Var v) const;

    // Simultaneous capture-free substitution; unbound variables are kept.
    // Throws DegenerateSubstitutionError if a denominator vanishes
    // identically after substitution.
    RatExpr substitute(const std::map<Var, RatExpr>& bindings) const;

    // Full rational evaluation; every present variable must be bound.
    Rational eval(const std::map<Var, Rational>& point) const;

    // Limit along v -> infinity when it is finite: deg_v num <= deg_v den.
    // The result does not involve v. Throws on a pole at infinity.
    RatExpr at_infinity(Var v) const;

    std::string str() const;

  private:
    Poly num_, den_;
};

// Exact square root of a rational expression, if one exists.
std::optional<RatExpr> ratexpr_sqrt(const RatExpr& f);

inline RatExpr operator+(const Rational& c, const RatExpr& x) { return RatExpr(c) + x; }
inline RatExpr operator-(const Rational& c, const RatExpr& x) { return RatExpr(c) - x; }
inline RatExpr operator*(const Rational& c, const RatExpr& x) { return RatExpr(c) * x; }

}  // namespace pvilab
