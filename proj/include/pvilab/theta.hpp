#pragma once

#include "pvilab/ratexpr.hpp"

namespace pvilab {

// Local exponent data (theta_0, theta_1, theta_t, theta_inf) attached to
// the singular points 0, 1, t and infinity.
struct Theta {
    Rational th0, th1, tht, thinf;

    bool operator==(const Theta& o) const {
        return th0 == o.th0 && th1 == o.th1 && tht == o.tht && thinf == o.thinf;
    }
};

// k = ((th0 + th1 + tht - 1)^2 - thinf^2) / 4.
Rational k_constant(const Theta& th);

// Hamiltonian K(lam, mu, t) of the Garnier system:
//   K = [lam(lam-1)(lam-t) mu^2
//        - {th0 (lam-1)(lam-t) + th1 lam(lam-t) + (tht - 1) lam(lam-1)} mu
//        + k (lam - t)] / (t(t-1)).
// This is the unique value making the extra singular point of the
// five-point normal form apparent; the Frobenius certificate in the test
// suite re-derives it independently.
RatExpr hamiltonian_K(const Theta& th);

}  // namespace pvilab
