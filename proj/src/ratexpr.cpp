#include "pvilab/ratexpr.hpp"

#include <cassert>

namespace pvilab {

RatExpr RatExpr::make(const Poly& num, const Poly& den) {
    if (den.is_zero())
        throw DivisionByZeroError("division by zero: [" + num.str() + "] / 0");
    RatExpr out;
    if (num.is_zero()) return out;
    Poly g = poly_gcd(num, den);
    out.num_ = exact_divide(num, g);
    out.den_ = exact_divide(den, g);
    Rational lc = out.den_.leading_rational();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        out.num_ = out.num_.scaled(inv);
        out.den_ = out.den_.scaled(inv);
    }
    return out;
}

Rational RatExpr::constant_value() const {
    assert(is_constant());
    return num_.constant_value() / den_.constant_value();
}

RatExpr RatExpr::operator-() const {
    RatExpr out = *this;
    out.num_ = -out.num_;
    return out;
}

RatExpr RatExpr::operator+(const RatExpr& o) const {
    if (den_ == o.den_) return make(num_ + o.num_, den_);
    return make(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatExpr RatExpr::operator-(const RatExpr& o) const { return *this + (-o); }

RatExpr RatExpr::operator*(const RatExpr& o) const {
    // Cross-cancel first to keep the final gcd small.
    Poly g1 = poly_gcd(num_, o.den_);
    Poly g2 = poly_gcd(o.num_, den_);
    return make(exact_divide(num_, g1) * exact_divide(o.num_, g2),
                exact_divide(den_, g2) * exact_divide(o.den_, g1));
}

RatExpr RatExpr::operator/(const RatExpr& o) const {
    if (o.is_zero())
        throw DivisionByZeroError("division by zero: [" + str() + "] / [" + o.str() + "]");
    return *this * RatExpr::make(o.den_, o.num_);
}

RatExpr RatExpr::pow(int e) const {
    if (e < 0) {
        if (is_zero()) throw DivisionByZeroError("zero to a negative power");
        return RatExpr::make(den_, num_).pow(-e);
    }
    return RatExpr::make(num_.pow(e), den_.pow(e));
}

RatExpr RatExpr::derivative(Var v) const {
    // (n/d)' = (n'd - nd')/d^2
    Poly n1 = num_.derivative(v) * den_ - num_ * den_.derivative(v);
    return make(n1, den_ * den_);
}

namespace {

// Horner evaluation of a polynomial where each variable maps to a RatExpr.
RatExpr substitute_poly(const Poly& p, const std::map<Var, RatExpr>& bindings) {
    if (p.is_zero()) return RatExpr();
    auto top = p.top_var();
    if (!top) return RatExpr(p.constant_value());
    Var v = *top;
    auto it = bindings.find(v);
    RatExpr image = it != bindings.end() ? it->second : RatExpr::variable(v);
    std::vector<Poly> cs = p.coeffs_in(v);
    RatExpr acc;
    for (size_t k = cs.size(); k-- > 0;) {
        acc = acc * image + substitute_poly(cs[k], bindings);
    }
    return acc;
}

}  // namespace

RatExpr RatExpr::substitute(const std::map<Var, RatExpr>& bindings) const {
    RatExpr n = substitute_poly(num_, bindings);
    RatExpr d = substitute_poly(den_, bindings);
    if (d.is_zero())
        throw DegenerateSubstitutionError("substitution made the denominator [" + den_.str() +
                                          "] identically zero");
    return n / d;
}

Rational RatExpr::eval(const std::map<Var, Rational>& point) const {
    Rational d = den_.eval(point);
    if (d == 0) throw DegenerateSubstitutionError("evaluation hit a zero denominator");
    return num_.eval(point) / d;
}

RatExpr RatExpr::at_infinity(Var v) const {
    int dn = num_.degree(v);
    int dd = den_.degree(v);
    if (num_.is_zero() || dn < dd) return RatExpr();
    if (dn > dd)
        throw Error("pole at infinity in " + std::string(var_name(v)) + " of [" + str() + "]");
    return RatExpr::make(num_.coeff_of(v, dn), den_.coeff_of(v, dd));
}

std::string RatExpr::str() const {
    if (is_polynomial()) {
        if (den_.constant_value() == 1) return num_.str();
        return "(" + num_.str() + ")/" + den_.constant_value().get_str();
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::optional<RatExpr> ratexpr_sqrt(const RatExpr& f) {
    if (f.is_zero()) return RatExpr();
    // sqrt(n/d) = sqrt(n*d)/d when n*d is a perfect square.
    auto w = poly_sqrt(f.num() * f.den());
    if (!w) return std::nullopt;
    RatExpr root = RatExpr::make(*w, f.den());
    if (root * root == f) return root;
    return std::nullopt;
}

}  // namespace pvilab
