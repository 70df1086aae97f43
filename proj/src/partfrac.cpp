#include "pvilab/partfrac.hpp"

#include "pvilab/upoly.hpp"

namespace pvilab {

namespace {

int pole_multiplicity(const Poly& den, Var v, const RatExpr& pole) {
    std::map<Var, RatExpr> at{{v, pole}};
    Poly d = den;
    int mult = 0;
    while (true) {
        RatExpr val = RatExpr(d).substitute(at);
        if (!val.is_zero()) return mult;
        ++mult;
        d = d.derivative(v);
        if (d.is_zero()) return mult;
    }
}

}  // namespace

RatExpr residue_at(const RatExpr& f, Var v, const RatExpr& pole) {
    std::map<Var, RatExpr> at{{v, pole}};
    RatExpr den_val = RatExpr(f.den()).substitute(at);
    if (!den_val.is_zero()) return RatExpr();
    RatExpr dden_val = RatExpr(f.den().derivative(v)).substitute(at);
    if (dden_val.is_zero()) {
        int mult = pole_multiplicity(f.den(), v, pole);
        throw MultiplicityError(
            "pole " + pole.str() + " has multiplicity " + std::to_string(mult) + ", expected simple",
            mult);
    }
    return RatExpr(f.num()).substitute(at) / dden_val;
}

PartialFractions partial_fractions(const RatExpr& f, Var v, const std::vector<RatExpr>& poles) {
    PartialFractions out;

    UPoly num = UPoly::from_ratexpr(RatExpr(f.num()), v);
    UPoly den = UPoly::from_ratexpr(RatExpr(f.den()), v);
    auto [quot, rem] = UPoly::divmod(num, den);
    out.polynomial_part = quot.to_ratexpr(v);
    RatExpr proper = f - out.polynomial_part;

    RatExpr reconstructed = out.polynomial_part;
    RatExpr x = RatExpr::variable(v);
    for (const RatExpr& pole : poles) {
        RatExpr res = residue_at(proper, v, pole);
        out.terms.push_back({pole, res});
        reconstructed += res / (x - pole);
    }
    if (!(reconstructed - f).is_zero())
        throw StructureMismatchError(
            "partial fractions over the given poles do not reconstruct the input; leftover = " +
            (f - reconstructed).str());
    return out;
}

}  // namespace pvilab
