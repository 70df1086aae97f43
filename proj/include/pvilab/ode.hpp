#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pvilab/ratexpr.hpp"
#include "pvilab/theta.hpp"

namespace pvilab {

// Second-order linear ODE a0 x'' + a1 x' + a2 x = 0 with coefficients
// polynomial in s over Q(a). Construction normalizes: common polynomial
// factors removed, sign fixed by a0's leading coefficient.
struct LinearODE2 {
    Poly a0, a1, a2;

    static LinearODE2 make(const Poly& a0, const Poly& a1, const Poly& a2);
    // Clear denominators of x'' + p1 x' + p2 x = 0.
    static LinearODE2 from_p1p2(const RatExpr& p1, const RatExpr& p2);

    RatExpr p1() const { return RatExpr(a1) / RatExpr(a0); }
    RatExpr p2() const { return RatExpr(a2) / RatExpr(a0); }

    bool operator==(const LinearODE2& o) const {
        return a0 == o.a0 && a1 == o.a1 && a2 == o.a2;
    }
};

// A singular point location: finite value in Q(a), or the point at infinity.
struct Location {
    bool infinite = false;
    RatExpr value;  // meaningful iff !infinite

    static Location at(const RatExpr& v) { return {false, v}; }
    static Location infinity() { return {true, {}}; }
    bool operator==(const Location& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    std::string str() const { return infinite ? "inf" : value.str(); }
};

enum class ApparentStatus { not_tested, apparent, logarithmic };

struct SchemeEntry {
    Location location;
    RatExpr exponent_lo, exponent_hi;  // ascending when both constant
    ApparentStatus status = ApparentStatus::not_tested;
};

struct RiemannScheme {
    std::vector<SchemeEntry> entries;  // finite points first, infinity last
    Rational fuchs_sum;                // sum of all exponents

    std::string table_str() const;  // 5-column layout
};

struct ApparentCertificate {
    ApparentStatus status;
    RatExpr obstruction;  // identically zero iff apparent
    int n;                // exponent difference tested
};

// Distinct roots of a0 over Q(a) followed by the point at infinity.
// Requires a0 to split into s-linear factors over Q(a).
std::vector<Location> singular_points(const LinearODE2& ode);

// The two indicial exponents at a regular singular point, ascending when
// both are constants.
std::pair<RatExpr, RatExpr> indicial_exponents(const LinearODE2& ode, const Location& point);

// Full Riemann scheme with the Fuchs exponent sum and apparent flags
// (points with exponents {0, n}, n a positive integer, get tested).
RiemannScheme riemann_scheme(const LinearODE2& ode);

// Frobenius test at a finite regular singular point with exponents {0, n}:
// runs the recursion from exponent 0 in exact arithmetic; the point is
// apparent iff the level-n obstruction vanishes identically.
ApparentCertificate apparent_test(const LinearODE2& ode, const Location& point);

// The normal form E_theta(lam, mu, t):
//   p1 = (1-th0)/s + (1-th1)/(s-1) + (1-tht)/(s-t) - 1/(s-lam)
//   p2 = k/(s(s-1)) - t(t-1)K/(s(s-1)(s-t)) + lam(lam-1)mu/(s(s-1)(s-lam))
// with K the Garnier Hamiltonian evaluated at (lam, mu, t) so that lam is
// apparent with exponents {0, 2}.
LinearODE2 build_e_theta(const Theta& th, const RatExpr& lam, const RatExpr& mu,
                         const RatExpr& t);

struct EThetaParams {
    Theta theta;          // thinf = difference of the infinity exponents (>= 0)
    RatExpr lam, t, mu;
    RatExpr alpha_inf;    // smaller exponent at infinity
    bool k_consistent;    // p1, p2 rebuilt from the extracted data match
    bool fuchs_constraint; // 2 alpha_inf + sum(theta) + n = 3 with n = 2
};

// Read (theta, lam, t, mu) back off an E_theta-shaped equation.
EThetaParams extract_e_theta_params(const LinearODE2& ode);

}  // namespace pvilab
