#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pvilab/ratexpr.hpp"
#include "pvilab/theta.hpp"

namespace pvilab {

// Rational value affine in the pencil parameter sigma: c0 + c1*sigma.
struct AffineRational {
    Rational c0, c1;

    static AffineRational constant(const Rational& c) { return {c, rat(0)}; }
    bool operator==(const AffineRational& o) const { return c0 == o.c0 && c1 == o.c1; }
    RatExpr expr() const;  // as a RatExpr in sigma
    std::string str() const;
};

// Painleve VI parameters in the (alpha0, alpha1, alpha2, alpha3)
// normalization; the classical tuple is (alpha, beta, gamma, delta)
// = (alpha0, -alpha1, alpha2, 1/2 - alpha3).
struct PVIParams {
    AffineRational alpha0, alpha1, alpha2, alpha3;

    static PVIParams constants(const Rational& a0, const Rational& a1, const Rational& a2,
                               const Rational& a3);
    // The pencil (1/8, sigma/8, sigma/8, sigma/8).
    static PVIParams pencil();

    struct Classical {
        RatExpr alpha, beta, gamma, delta;  // RatExpr in sigma
    };
    Classical classical() const;

    bool operator==(const PVIParams& o) const {
        return alpha0 == o.alpha0 && alpha1 == o.alpha1 && alpha2 == o.alpha2 &&
               alpha3 == o.alpha3;
    }
};

// Which denominator the P_VI right-hand side prefactor carries:
// t^2(t-1)^2 (standard) or t^2(t^2-1) (as printed in the source text).
enum class PVIVariant { standard, printed };

const char* variant_name(PVIVariant v);

// A curve (lam(a), t(a)), optionally with the conjugate momentum mu(a).
struct AlgebraicSolution {
    RatExpr lam_of_a;
    RatExpr t_of_a;
    std::optional<RatExpr> mu_of_a;

    // dt/da != 0 and lam, t, 0, 1 pairwise distinct as functions of a.
    void validate() const;
};

// The two named solutions: eq1 = (a^2(2-a)/(a^2-a+1), a^3(2-a)/(2a-1)),
// eq2 = (a(a-2)(2a^2+a+2)/(a^2-7a+1), same t).
AlgebraicSolution solution_eq1();
AlgebraicSolution solution_eq2();
std::optional<AlgebraicSolution> solution_by_name(const std::string& name);

// Polynomials in a whose roots must be excluded before specializing the
// curve at a rational point (vanishing denominators, dt/da = 0, collisions
// of {0, 1, t, lam}).
std::vector<Poly> exclusion_polynomials(const AlgebraicSolution& sol);
void check_a_admissible(const AlgebraicSolution& sol, const Rational& a_value);

// P_VI right-hand side as a rational expression in the given lam / v
// (= dlam/dt) / t expressions; params may involve sigma.
RatExpr pvi_rhs(const RatExpr& lam, const RatExpr& v, const RatExpr& t, const PVIParams& params,
                PVIVariant variant);

// Exact residual of P_VI on the curve: lam'' - RHS with derivatives taken
// through a (chain rule by dt/da). Zero iff the curve solves P_VI(params).
RatExpr pvi_residual_on_curve(const AlgebraicSolution& sol, const PVIParams& params,
                              PVIVariant variant);

// residual = R0 + sigma*R1 (errors if the sigma-degree exceeds 1).
std::pair<RatExpr, RatExpr> pencil_decompose(const RatExpr& residual);

// Left-hand side of -t/lam^2 + (t-1)/(lam-1)^2 - t(t-1)/(lam-t)^2 after
// substituting the curve; identically zero exactly for the pencil curve.
RatExpr bracket_identity_check(const AlgebraicSolution& sol);

// alpha = (thinf^2/2, th0^2/2, th1^2/2, tht^2/2).
PVIParams alpha_from_theta(const Theta& th);

// Eliminating mu from the Garnier system must reproduce P_VI with
// alpha_from_theta. Per theta: the fully symbolic residual in (lam, v, t)
// is normalized (canonical zero expected) and both sides are compared at
// seeded random rational points; the sample count exceeds the certified
// degree bound of the cleared difference.
struct GarnierPviTheta {
    Theta theta;
    bool symbolic_zero = false;
    int samples = 0;
    int equal = 0;
    int degree_bound_lam = 0, degree_bound_v = 0, degree_bound_t = 0;
    std::optional<std::string> witness;  // first mismatching sample, if any
};

struct GarnierPviReport {
    std::vector<GarnierPviTheta> per_theta;
    uint64_t seed = 0;
    bool pass = false;
};

GarnierPviReport garnier_to_pvi_check(const std::vector<Theta>& thetas, uint64_t seed,
                                      int min_samples = 200);

// Residuals of the two Hamilton equations on the curve:
//   dlam/dt - dK/dmu  and  dmu/dt + dK/dlam,
// with d/dt = (d/da)/(dt/da). Requires mu_of_a.
std::pair<RatExpr, RatExpr> verify_garnier_on_curve(const AlgebraicSolution& sol,
                                                    const Theta& th);

}  // namespace pvilab
