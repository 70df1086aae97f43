#include "pvilab/upoly.hpp"

#include <cassert>

namespace pvilab {

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const RatExpr& x) {
    UPoly p;
    if (!x.is_zero()) p.c_ = {x};
    return p;
}

UPoly UPoly::monomial(const RatExpr& coeff, int power) {
    UPoly p;
    if (coeff.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(power) + 1, RatExpr());
    p.c_.back() = coeff;
    return p;
}

UPoly UPoly::from_ratexpr(const RatExpr& f, Var v) {
    if (f.den().degree(v) != 0)
        throw Error("from_ratexpr: denominator involves " + std::string(var_name(v)) + ": " +
                    f.str());
    RatExpr inv_den = RatExpr(Poly::constant(1)) / RatExpr(f.den());
    std::vector<Poly> cs = f.num().coeffs_in(v);
    std::vector<RatExpr> out;
    out.reserve(cs.size());
    for (const Poly& p : cs) out.push_back(RatExpr(p) * inv_den);
    return UPoly(std::move(out));
}

RatExpr UPoly::to_ratexpr(Var v) const {
    RatExpr x = RatExpr::variable(v);
    RatExpr acc;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

RatExpr UPoly::coeff(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= c_.size()) return RatExpr();
    return c_[static_cast<size_t>(k)];
}

UPoly UPoly::operator-() const {
    UPoly out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

UPoly UPoly::operator+(const UPoly& o) const {
    UPoly out;
    out.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < out.c_.size(); ++i) {
        if (i < c_.size()) out.c_[i] += c_[i];
        if (i < o.c_.size()) out.c_[i] += o.c_[i];
    }
    out.trim();
    return out;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    UPoly out;
    out.c_.assign(c_.size() + o.c_.size() - 1, RatExpr());
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out.c_[i + j] += c_[i] * o.c_[j];
    out.trim();
    return out;
}

UPoly UPoly::scaled(const RatExpr& x) const {
    if (x.is_zero()) return UPoly();
    UPoly out = *this;
    for (auto& q : out.c_) q *= x;
    return out;
}

UPoly UPoly::shifted(int k) const {
    assert(k >= 0);
    if (is_zero()) return UPoly();
    UPoly out;
    out.c_.assign(c_.size() + static_cast<size_t>(k), RatExpr());
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i + static_cast<size_t>(k)] = c_[i];
    return out;
}

UPoly UPoly::derivative() const {
    UPoly out;
    if (c_.size() <= 1) return out;
    out.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out.c_[i - 1] = RatExpr(rat(static_cast<long>(i))) * c_[i];
    out.trim();
    return out;
}

RatExpr UPoly::eval(const RatExpr& x) const {
    RatExpr acc;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& p, const UPoly& d) {
    if (d.is_zero()) throw DivisionByZeroError("univariate division by zero");
    UPoly q, r = p;
    RatExpr inv_lead = RatExpr(Poly::constant(1)) / d.lead();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        RatExpr factor = r.lead() * inv_lead;
        UPoly term = UPoly::monomial(factor, k);
        q = q + term;
        r = r - term * d;
    }
    return {q, r};
}

std::vector<RatExpr> upoly_roots(const UPoly& p) {
    const RatExpr zero{rat(0)}, one{rat(1)};
    std::vector<RatExpr> roots;
    UPoly rem = p;
    while (rem.degree() >= 1) {
        if (rem.coeff(0).is_zero()) {
            roots.push_back(zero);
            std::vector<RatExpr> shifted(rem.coeffs().begin() + 1, rem.coeffs().end());
            rem = UPoly(shifted);
            continue;
        }
        if (rem.eval(one).is_zero()) {
            roots.push_back(one);
            rem = UPoly::divmod(rem, UPoly({-one, one})).first;
            continue;
        }
        if (rem.degree() == 1) {
            roots.push_back(-rem.coeff(0) / rem.coeff(1));
            break;
        }
        if (rem.degree() == 2) {
            RatExpr A = rem.coeff(2), B = rem.coeff(1), C = rem.coeff(0);
            auto w = ratexpr_sqrt(B * B - rat(4) * A * C);
            if (!w)
                throw Error("upoly_roots: irreducible quadratic factor: " +
                            rem.to_ratexpr(Var::s).str());
            RatExpr inv = one / (rat(2) * A);
            roots.push_back((-B - *w) * inv);
            roots.push_back((-B + *w) * inv);
            break;
        }
        throw Error("upoly_roots: cannot split factor of degree " + std::to_string(rem.degree()));
    }
    return roots;
}

ExtendedGcd upoly_egcd(const UPoly& p, const UPoly& q) {
    // Standard extended Euclid over a field, with monic normalization.
    UPoly r0 = p, r1 = q;
    UPoly u0 = UPoly::constant(RatExpr(rat(1))), u1;
    UPoly w0, w1 = UPoly::constant(RatExpr(rat(1)));
    while (!r1.is_zero()) {
        auto [quot, rem] = UPoly::divmod(r0, r1);
        UPoly u2 = u0 - quot * u1;
        UPoly w2 = w0 - quot * w1;
        r0 = r1;
        r1 = rem;
        u0 = u1;
        u1 = u2;
        w0 = w1;
        w1 = w2;
    }
    if (r0.is_zero()) return {r0, u0, w0};
    RatExpr inv = RatExpr(rat(1)) / r0.lead();
    return {r0.scaled(inv), u0.scaled(inv), w0.scaled(inv)};
}

}  // namespace pvilab
