#include "pvilab/garnier.hpp"

#include <algorithm>
#include <sstream>

#include "pvilab/parser.hpp"
#include "pvilab/rng.hpp"

namespace pvilab {

namespace {

const RatExpr kOne{rat(1)};

RatExpr sigma_var() { return RatExpr::variable(Var::sigma); }

}  // namespace

RatExpr AffineRational::expr() const { return RatExpr(c0) + RatExpr(c1) * sigma_var(); }

std::string AffineRational::str() const {
    if (c1 == 0) return c0.get_str();
    std::string out;
    if (c0 != 0) out = c0.get_str() + " + ";
    return out + c1.get_str() + "*sigma";
}

PVIParams PVIParams::constants(const Rational& a0, const Rational& a1, const Rational& a2,
                               const Rational& a3) {
    return {AffineRational::constant(a0), AffineRational::constant(a1),
            AffineRational::constant(a2), AffineRational::constant(a3)};
}

PVIParams PVIParams::pencil() {
    return {{rat(1, 8), rat(0)}, {rat(0), rat(1, 8)}, {rat(0), rat(1, 8)}, {rat(0), rat(1, 8)}};
}

PVIParams::Classical PVIParams::classical() const {
    return {alpha0.expr(), -alpha1.expr(), alpha2.expr(), RatExpr(rat(1, 2)) - alpha3.expr()};
}

const char* variant_name(PVIVariant v) {
    return v == PVIVariant::standard ? "standard" : "printed";
}

void AlgebraicSolution::validate() const {
    if (t_of_a.derivative(Var::a).is_zero())
        throw DegenerateParameterError("algebraic solution has dt/da = 0");
    const RatExpr& lam = lam_of_a;
    const RatExpr& t = t_of_a;
    for (const RatExpr& d : {lam, lam - kOne, lam - t, t, t - kOne})
        if (d.is_zero())
            throw DegenerateParameterError("algebraic solution has colliding {0,1,t,lam}");
}

AlgebraicSolution solution_eq1() {
    return {parse_ratexpr("a^2*(2-a)/(a^2-a+1)"), parse_ratexpr("a^3*(2-a)/(2*a-1)"),
            std::nullopt};
}

AlgebraicSolution solution_eq2() {
    return {parse_ratexpr("a*(a-2)*(2*a^2+a+2)/(a^2-7*a+1)"), parse_ratexpr("a^3*(2-a)/(2*a-1)"),
            std::nullopt};
}

std::optional<AlgebraicSolution> solution_by_name(const std::string& name) {
    if (name == "eq1") return solution_eq1();
    if (name == "eq2") return solution_eq2();
    return std::nullopt;
}

std::vector<Poly> exclusion_polynomials(const AlgebraicSolution& sol) {
    std::vector<Poly> out;
    auto add = [&](const Poly& p) {
        if (p.is_constant()) return;
        Poly c = poly_canonical(p);
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    };
    const RatExpr& lam = sol.lam_of_a;
    const RatExpr& t = sol.t_of_a;
    add(lam.den());
    add(t.den());
    if (sol.mu_of_a) add(sol.mu_of_a->den());
    add(t.derivative(Var::a).num());
    for (const RatExpr& d : {lam, lam - kOne, lam - t, t, t - kOne}) add(d.num());
    return out;
}

void check_a_admissible(const AlgebraicSolution& sol, const Rational& a_value) {
    for (const Poly& p : exclusion_polynomials(sol))
        if (p.eval({{Var::a, a_value}}) == 0)
            throw DegenerateParameterError("a = " + a_value.get_str() +
                                           " lies in the exclusion set (root of " + p.str() + ")");
}

RatExpr pvi_rhs(const RatExpr& lam, const RatExpr& v, const RatExpr& t, const PVIParams& params,
                PVIVariant variant) {
    auto [alpha, beta, gamma, delta] = params.classical();
    RatExpr half(rat(1, 2));
    RatExpr first = half * (kOne / lam + kOne / (lam - kOne) + kOne / (lam - t)) * v * v;
    RatExpr second = (kOne / t + kOne / (t - kOne) + kOne / (lam - t)) * v;
    RatExpr den = (variant == PVIVariant::standard) ? t * t * (t - kOne) * (t - kOne)
                                                    : t * t * (t * t - kOne);
    RatExpr pref = lam * (lam - kOne) * (lam - t) / den;
    RatExpr bracket = alpha + beta * t / (lam * lam) + gamma * (t - kOne) / ((lam - kOne) * (lam - kOne)) +
                      delta * t * (t - kOne) / ((lam - t) * (lam - t));
    return first - second + pref * bracket;
}

RatExpr pvi_residual_on_curve(const AlgebraicSolution& sol, const PVIParams& params,
                              PVIVariant variant) {
    sol.validate();
    const RatExpr& lam = sol.lam_of_a;
    const RatExpr& t = sol.t_of_a;
    RatExpr dt = t.derivative(Var::a);
    RatExpr lam_t = lam.derivative(Var::a) / dt;
    RatExpr lam_tt = lam_t.derivative(Var::a) / dt;
    return lam_tt - pvi_rhs(lam, lam_t, t, params, variant);
}

std::pair<RatExpr, RatExpr> pencil_decompose(const RatExpr& residual) {
    if (residual.den().degree(Var::sigma) != 0)
        throw Error("pencil_decompose: denominator involves sigma");
    if (residual.num().degree(Var::sigma) > 1)
        throw Error("pencil_decompose: sigma-degree " +
                    std::to_string(residual.num().degree(Var::sigma)) + " exceeds 1");
    RatExpr den{residual.den()};
    RatExpr r0 = RatExpr(residual.num().coeff_of(Var::sigma, 0)) / den;
    RatExpr r1 = RatExpr(residual.num().coeff_of(Var::sigma, 1)) / den;
    return {r0, r1};
}

RatExpr bracket_identity_check(const AlgebraicSolution& sol) {
    sol.validate();
    const RatExpr& lam = sol.lam_of_a;
    const RatExpr& t = sol.t_of_a;
    return -t / (lam * lam) + (t - kOne) / ((lam - kOne) * (lam - kOne)) -
           t * (t - kOne) / ((lam - t) * (lam - t));
}

PVIParams alpha_from_theta(const Theta& th) {
    auto half_sq = [](const Rational& x) { return Rational(x * x / 2); };
    return PVIParams::constants(half_sq(th.thinf), half_sq(th.th0), half_sq(th.th1),
                                half_sq(th.tht));
}

namespace {

// Split an expression affine in mu into (constant part, mu-coefficient).
std::pair<RatExpr, RatExpr> split_affine(const RatExpr& f, Var v) {
    RatExpr at0 = f.substitute({{v, RatExpr(rat(0))}});
    RatExpr at1 = f.substitute({{v, RatExpr(rat(1))}});
    return {at0, at1 - at0};
}

// Both sides of the Garnier -> P_VI elimination as expressions in
// (lam, v, t) for a fixed theta.
struct EliminationSides {
    RatExpr lam_tt;  // from the Hamiltonian flow, mu eliminated
    RatExpr rhs;     // P_VI right-hand side at alpha_from_theta
};

EliminationSides eliminate_mu(const Theta& th) {
    RatExpr K = hamiltonian_K(th);
    RatExpr Kmu = K.derivative(Var::mu);
    RatExpr Klam = K.derivative(Var::lam);
    RatExpr Kmumu = Kmu.derivative(Var::mu);
    RatExpr Klammu = Kmu.derivative(Var::lam);
    RatExpr Ktmu = Kmu.derivative(Var::t);

    // Kmu is affine in mu; solve Kmu = v for mu.
    auto [c0, c1] = split_affine(Kmu, Var::mu);
    RatExpr v = RatExpr::variable(Var::v);
    RatExpr mu_star = (v - c0) / c1;

    // lam'' = d/dt (dK/dmu) along the flow.
    RatExpr lam_tt = Ktmu + Klammu * v - Kmumu * Klam;
    lam_tt = lam_tt.substitute({{Var::mu, mu_star}});

    RatExpr rhs = pvi_rhs(RatExpr::variable(Var::lam), v, RatExpr::variable(Var::t),
                          alpha_from_theta(th), PVIVariant::standard);
    return {lam_tt, rhs};
}

int degree_bound(const EliminationSides& sides, Var var) {
    // After clearing to a common denominator, the difference numerator has
    // degree at most this in `var`.
    int n1 = sides.lam_tt.num().degree(var), d1 = sides.lam_tt.den().degree(var);
    int n2 = sides.rhs.num().degree(var), d2 = sides.rhs.den().degree(var);
    return std::max(n1 + d2, n2 + d1);
}

}  // namespace

GarnierPviReport garnier_to_pvi_check(const std::vector<Theta>& thetas, uint64_t seed,
                                      int min_samples) {
    GarnierPviReport report;
    report.seed = seed;
    report.pass = true;
    SplitMix64 rng(seed);

    for (const Theta& th : thetas) {
        GarnierPviTheta entry;
        entry.theta = th;
        EliminationSides sides = eliminate_mu(th);
        entry.symbolic_zero = (sides.lam_tt - sides.rhs).is_zero();
        entry.degree_bound_lam = degree_bound(sides, Var::lam);
        entry.degree_bound_v = degree_bound(sides, Var::v);
        entry.degree_bound_t = degree_bound(sides, Var::t);
        int total_bound = entry.degree_bound_lam + entry.degree_bound_v + entry.degree_bound_t;
        int want = std::max(min_samples, total_bound + 1);

        int done = 0;
        while (done < want) {
            Rational lam_v = rng.rational(999, 40);
            Rational v_v = rng.rational(999, 40);
            Rational t_v = rng.rational(999, 40);
            std::map<Var, Rational> point{{Var::lam, lam_v}, {Var::v, v_v}, {Var::t, t_v}};
            Rational lhs, rhs;
            try {
                lhs = sides.lam_tt.eval(point);
                rhs = sides.rhs.eval(point);
            } catch (const DegenerateSubstitutionError&) {
                continue;  // resample away from the excluded denominators
            }
            ++done;
            if (lhs == rhs) {
                ++entry.equal;
            } else if (!entry.witness) {
                std::ostringstream os;
                os << "lam=" << lam_v.get_str() << " v=" << v_v.get_str()
                   << " t=" << t_v.get_str() << " lhs=" << lhs.get_str()
                   << " rhs=" << rhs.get_str();
                entry.witness = os.str();
            }
        }
        entry.samples = done;
        if (!entry.symbolic_zero || entry.equal != entry.samples) report.pass = false;
        report.per_theta.push_back(std::move(entry));
    }
    return report;
}

std::pair<RatExpr, RatExpr> verify_garnier_on_curve(const AlgebraicSolution& sol,
                                                    const Theta& th) {
    if (!sol.mu_of_a) throw Error("verify_garnier_on_curve: mu(a) is required");
    sol.validate();

    RatExpr K = hamiltonian_K(th);
    std::map<Var, RatExpr> bind{
        {Var::lam, sol.lam_of_a}, {Var::mu, *sol.mu_of_a}, {Var::t, sol.t_of_a}};
    RatExpr dt = sol.t_of_a.derivative(Var::a);
    RatExpr r1 = sol.lam_of_a.derivative(Var::a) / dt - K.derivative(Var::mu).substitute(bind);
    RatExpr r2 = sol.mu_of_a->derivative(Var::a) / dt + K.derivative(Var::lam).substitute(bind);
    return {r1, r2};
}

}  // namespace pvilab
