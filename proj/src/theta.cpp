#include "pvilab/theta.hpp"

namespace pvilab {

Rational k_constant(const Theta& th) {
    Rational sum = th.th0 + th.th1 + th.tht - 1;
    return (sum * sum - th.thinf * th.thinf) / 4;
}

RatExpr hamiltonian_K(const Theta& th) {
    RatExpr lam = RatExpr::variable(Var::lam);
    RatExpr t = RatExpr::variable(Var::t);
    RatExpr mu = RatExpr::variable(Var::mu);
    RatExpr one(rat(1));

    RatExpr quad = lam * (lam - one) * (lam - t);
    RatExpr lin = th.th0 * ((lam - one) * (lam - t)) + th.th1 * (lam * (lam - t)) +
                  (th.tht - 1) * (lam * (lam - one));
    RatExpr k(k_constant(th));
    return (quad * mu * mu - lin * mu + k * (lam - t)) / (t * (t - one));
}

}  // namespace pvilab
