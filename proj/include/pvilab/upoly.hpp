#pragma once

#include <utility>
#include <vector>

#include "pvilab/ratexpr.hpp"

namespace pvilab {

// Dense univariate polynomial over the field of RatExpr values. The main
// variable is abstract: coefficients must not involve it. Used for local
// expansions, field division, and the extended Euclidean algorithm.
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::vector<RatExpr> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UPoly constant(const RatExpr& x);
    static UPoly monomial(const RatExpr& coeff, int power);

    // View a RatExpr that is polynomial in v as a UPoly in v; the
    // denominator must not involve v.
    static UPoly from_ratexpr(const RatExpr& f, Var v);
    RatExpr to_ratexpr(Var v) const;

    const std::vector<RatExpr>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    RatExpr coeff(int k) const;
    const RatExpr& lead() const { return c_.back(); }

    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    UPoly operator-() const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly scaled(const RatExpr& x) const;
    UPoly shifted(int k) const;  // multiply by main^k

    UPoly derivative() const;
    RatExpr eval(const RatExpr& x) const;

    // Field division: p = q*d + r with deg r < deg d.
    static std::pair<UPoly, UPoly> divmod(const UPoly& p, const UPoly& d);

  private:
    void trim();
    std::vector<RatExpr> c_;
};

// g = gcd (monic), with u*p + w*q = g.
struct ExtendedGcd {
    UPoly g, u, w;
};
ExtendedGcd upoly_egcd(const UPoly& p, const UPoly& q);

// All roots of p in the coefficient field, found by deflating 0 and 1 and
// solving what remains (degree <= 2, via an exact discriminant square
// root). Throws when an irreducible or high-degree factor is left over —
// enough for every equation this project meets.
std::vector<RatExpr> upoly_roots(const UPoly& p);

}  // namespace pvilab
