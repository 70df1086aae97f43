#include "pvilab/picard_fuchs.hpp"

#include <algorithm>
#include <map>

#include "pvilab/parser.hpp"
#include "pvilab/partfrac.hpp"

namespace pvilab {

namespace {

const RatExpr kZero{rat(0)};
const RatExpr kOne{rat(1)};

RatExpr over_2a1(const std::string& num) { return parse_ratexpr(num) / parse_ratexpr("2*a-1"); }

// s - Q(xi) as a polynomial in xi over Q(a, s).
UPoly fiber_poly(const QuarticFamily& fam) {
    return UPoly::constant(RatExpr::variable(Var::s)) - fam.Q;
}

// Numerator of the exact form sum_k B[k] d(xi^k eta^(1-2m)) at level
// eta^(2m+1): B'(s-Q) - (1-2m)/2 * B * Q'.
UPoly exact_form_numerator(const QuarticFamily& fam, const CertificatePiece& piece) {
    UPoly sq = fiber_poly(fam);
    RatExpr half_coeff = RatExpr(rat(1 - 2 * piece.m, 2));
    return piece.B.derivative() * sq - piece.B.scaled(half_coeff) * fam.Qprime();
}

// Working state: numerators per eta-level.
using Levels = std::map<int, UPoly>;

void add_to_level(Levels& levels, int m, const UPoly& p) {
    auto it = levels.find(m);
    if (it == levels.end())
        levels.emplace(m, p);
    else
        it->second = it->second + p;
}

// One eta-level elimination step: rewrite P/eta^(2m+1) as X/eta^(2m-1)
// plus an exact form, via the Bezout identity for (s-Q, Q').
void lower_level(const QuarticFamily& fam, Levels& levels, int m,
                 std::vector<CertificatePiece>& cert) {
    UPoly P = levels[m];
    levels.erase(m);
    if (P.is_zero()) return;
    UPoly sq = fiber_poly(fam);
    UPoly qp = fam.Qprime();
    ExtendedGcd e = upoly_egcd(sq, qp);
    if (e.g.degree() != 0)
        throw Error("reduce_form: s - Q is not squarefree in xi");
    // beta = P*w mod (s-Q); alpha = (P - beta Q')/(s-Q) exactly.
    UPoly beta = UPoly::divmod(P * e.w, sq).second;
    auto [alpha, rem] = UPoly::divmod(P - beta * qp, sq);
    if (!rem.is_zero()) throw Error("reduce_form: Bezout split failed");
    RatExpr two_over = RatExpr(rat(2, 1 - 2 * m));
    add_to_level(levels, m - 1, alpha + beta.derivative().scaled(two_over));
    cert.push_back({beta.scaled(-two_over), m});
}

// One xi-degree elimination step at level 1 using d(xi^k eta).
void lower_degree(const QuarticFamily& fam, Levels& levels,
                  std::vector<CertificatePiece>& cert) {
    UPoly& P = levels[0];
    int d = P.degree();
    if (d < 3) return;
    int k = d - 3;
    RatExpr q4 = fam.Q.coeff(4);
    RatExpr factor = P.lead() / (RatExpr(rat(k + 2)) * q4);
    // numerator of d(xi^k eta): k xi^(k-1) (s-Q) - 1/2 xi^k Q'
    UPoly sq = fiber_poly(fam);
    UPoly ek = sq.scaled(RatExpr(rat(k))).shifted(k > 0 ? k - 1 : 0) -
               fam.Qprime().scaled(RatExpr(rat(1, 2))).shifted(k);
    P = P + ek.scaled(factor);
    if (P.degree() >= d) throw Error("reduce_form: degree reduction failed");
    cert.push_back({UPoly::monomial(-factor, k), 0});
}

}  // namespace

QuarticFamily QuarticFamily::standard() {
    QuarticFamily fam;
    fam.Q = UPoly({kZero, kZero, over_2a1("6*a"), over_2a1("-4*(a+1)"), over_2a1("3")});
    return fam;
}

FormSpec FormSpec::s_derivative() const {
    return {P.scaled(RatExpr(rat(-(2 * m + 1), 2))), m + 1};
}

FormSpec form_first_kind() { return {UPoly::constant(kOne), 0}; }

FormSpec form_second_kind() {
    // (3 xi^2 - (2a^2+a+2)) xi dxi / eta: the unique xi-odd cubic numerator
    // with this leading term and no residue at infinity.
    return {UPoly({kZero, parse_ratexpr("-(2*a^2+a+2)"), kZero, RatExpr(rat(3))}), 0};
}

ReducedVector reduce_form(const QuarticFamily& fam, const FormSpec& form, ReductionOrder order) {
    if (form.m < 0) throw Error("reduce_form: negative eta level");
    Levels levels;
    add_to_level(levels, form.m, form.P);
    std::vector<CertificatePiece> cert;

    if (order == ReductionOrder::level_first) {
        for (int m = form.m; m >= 1; --m) lower_level(fam, levels, m, cert);
        while (levels[0].degree() >= 3) lower_degree(fam, levels, cert);
    } else {
        // Interleave: reduce the degree at level 0 whenever possible, and
        // lower one level at a time starting from the top.
        for (int m = form.m; m >= 1; --m) {
            lower_level(fam, levels, m, cert);
            while (levels.count(0) && levels[0].degree() >= 3) lower_degree(fam, levels, cert);
        }
        while (levels[0].degree() >= 3) lower_degree(fam, levels, cert);
    }

    ReducedVector out;
    UPoly final = levels[0];
    for (int i = 0; i < 3; ++i) out.c[static_cast<size_t>(i)] = final.coeff(i);
    out.certificate = std::move(cert);

    // Self-check: input - result - (exact forms) must vanish identically
    // once everything is written over the common level eta^(2M+1).
    int M = form.m;
    for (const auto& piece : out.certificate) M = std::max(M, piece.m);
    UPoly sq = fiber_poly(fam);
    std::vector<UPoly> sq_pow(static_cast<size_t>(M) + 1);
    sq_pow[0] = UPoly::constant(kOne);
    for (int i = 1; i <= M; ++i)
        sq_pow[static_cast<size_t>(i)] = sq_pow[static_cast<size_t>(i - 1)] * sq;
    UPoly total = form.P * sq_pow[static_cast<size_t>(M - form.m)];
    total = total - final * sq_pow[static_cast<size_t>(M)];
    for (const auto& piece : out.certificate)
        total = total - exact_form_numerator(fam, piece) * sq_pow[static_cast<size_t>(M - piece.m)];
    if (!total.is_zero()) throw Error("reduce_form: certificate verification failed");
    return out;
}

std::vector<RatExpr> critical_values(const QuarticFamily& fam) {
    std::vector<RatExpr> points = upoly_roots(fam.Qprime());
    std::vector<RatExpr> values;
    for (const RatExpr& p : points) {
        RatExpr val = fam.Q.eval(p);
        if (std::find(values.begin(), values.end(), val) == values.end()) values.push_back(val);
    }
    return values;
}

LinearODE2 derive_pf(const QuarticFamily& fam, const FormSpec& form, ReductionOrder order) {
    FormSpec d1 = form.s_derivative();
    FormSpec d2 = d1.s_derivative();
    std::array<ReducedVector, 3> rows = {reduce_form(fam, form, order),
                                         reduce_form(fam, d1, order),
                                         reduce_form(fam, d2, order)};

    auto det2 = [&](int r1, int r2, int c1, int c2) {
        return rows[static_cast<size_t>(r1)].c[static_cast<size_t>(c1)] *
                   rows[static_cast<size_t>(r2)].c[static_cast<size_t>(c2)] -
               rows[static_cast<size_t>(r1)].c[static_cast<size_t>(c2)] *
                   rows[static_cast<size_t>(r2)].c[static_cast<size_t>(c1)];
    };
    RatExpr det3 = rows[0].c[0] * det2(1, 2, 1, 2) - rows[0].c[1] * det2(1, 2, 0, 2) +
                   rows[0].c[2] * det2(1, 2, 0, 1);
    if (!det3.is_zero())
        throw RankError("derive_pf: reduced vectors have rank 3, third order only");

    // Kernel vector from 2x2 minors on a column pair where they are not
    // all zero; (a2, a1, a0) annihilates (v0, v1, v2).
    std::array<RatExpr, 3> kernel;
    bool found = false;
    for (auto [c1, c2] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        kernel = {det2(1, 2, c1, c2), -det2(0, 2, c1, c2), det2(0, 1, c1, c2)};
        if (!kernel[0].is_zero() || !kernel[1].is_zero() || !kernel[2].is_zero()) {
            found = true;
            break;
        }
    }
    if (!found) throw RankError("derive_pf: reduced vectors have rank <= 1");
    for (int col = 0; col < 3; ++col) {
        RatExpr check = kernel[0] * rows[0].c[static_cast<size_t>(col)] +
                        kernel[1] * rows[1].c[static_cast<size_t>(col)] +
                        kernel[2] * rows[2].c[static_cast<size_t>(col)];
        if (!check.is_zero()) throw RankError("derive_pf: kernel relation failed to verify");
    }
    if (kernel[2].is_zero()) throw RankError("derive_pf: leading coefficient vanished");

    // Clear to polynomial coefficients in (a, s).
    Poly lcm = kernel[0].den();
    for (int i = 1; i < 3; ++i) {
        const Poly& d = kernel[static_cast<size_t>(i)].den();
        lcm = exact_divide(lcm * d, poly_gcd(lcm, d));
    }
    RatExpr D{lcm};
    std::array<Poly, 3> cleared;
    for (int i = 0; i < 3; ++i) {
        RatExpr x = kernel[static_cast<size_t>(i)] * D;
        if (!x.is_polynomial()) throw Error("derive_pf: denominator clearing failed");
        cleared[static_cast<size_t>(i)] =
            x.num().scaled(Rational(1) / x.den().constant_value());
    }
    return LinearODE2::make(cleared[2], cleared[1], cleared[0]);
}

LinearODE2 lemma_coefficients(LemmaKind kind) {
    if (kind == LemmaKind::first) {
        Poly a0 = parse_poly("s*(s-1)*((2*a-1)*s+a^3*(a-2))*((a^2-a+1)*s+a^2*(a-2))");
        Poly a1 = parse_poly(
            "2*(2*a-1)*(a^2-a+1)*s^3+(a^6-3*a^5+9*a^4-19*a^3+9*a^2-3*a+1)*s^2"
            "+2*a^2*(a-2)*(a^4-2*a^3-2*a+1)*s-a^5*(a-2)^2");
        Poly a2 = parse_poly(
            "(2*a-1)*(27*(a^2-a+1)*s^2-(a-2)*(2*a^4-a^3-60*a^2-a+2)*s"
            "+a^2*(a-2)^2*(10*a^2+11*a+10))/144");
        return {a0, a1, a2};
    }
    Poly b0 = parse_poly("s*(s-1)*((2*a-1)*s+a^3*(a-2))*((a^2-7*a+1)*s-a*(a-2)*(2*a^2+a+2))");
    Poly b1 = parse_poly(
        "(2*a-1)*s*((a^2-7*a+1)*s^2-2*a*(a-2)*(2*a^2+a+2)*s"
        "-a*(a-2)^2*(a^4+a^3+a^2+a+1))");
    Poly b2 = parse_poly(
        "-(2*a-1)*(9*(a^2-7*a+1)*s^2-(a-2)*(10*a^4+31*a^3-12*a^2+31*a+10)*s"
        "-a*(a-2)^2*(2*a^2+a+2)^2)/144");
    return {b0, b1, b2};
}

RatExpr match_lemma(const LinearODE2& derived, const LinearODE2& printed) {
    RatExpr c = RatExpr(derived.a0) / RatExpr(printed.a0);
    if (c.num().degree(Var::s) != 0 || c.den().degree(Var::s) != 0)
        throw StructureMismatchError("match_lemma: a0 ratio involves s: " + c.str());
    if (!(RatExpr(derived.a1) - c * RatExpr(printed.a1)).is_zero())
        throw StructureMismatchError("match_lemma: a1 does not match (a0 ratio " + c.str() + ")");
    if (!(RatExpr(derived.a2) - c * RatExpr(printed.a2)).is_zero())
        throw StructureMismatchError("match_lemma: a2 does not match (a0 ratio " + c.str() + ")");
    return c;
}

WronskianReport wronskian_form_check(const LinearODE2& ode) {
    WronskianReport report;
    RiemannScheme scheme = riemann_scheme(ode);

    std::vector<RatExpr> poles;
    std::map<size_t, Rational> expected;
    for (size_t i = 0; i < scheme.entries.size(); ++i) {
        const auto& e = scheme.entries[i];
        if (e.location.infinite) continue;
        poles.push_back(e.location.value);
        expected[poles.size() - 1] =
            1 - e.exponent_lo.constant_value() - e.exponent_hi.constant_value();
    }

    RatExpr p1 = ode.p1();
    PartialFractions pf = partial_fractions(p1, Var::s, poles);
    report.reconstruction_exact = pf.polynomial_part.is_zero();
    report.residues_match_scheme = true;
    for (size_t i = 0; i < poles.size(); ++i) {
        if (!pf.terms[i].residue.is_constant())
            throw StructureMismatchError("wronskian_form_check: non-constant residue at " +
                                         poles[i].str());
        Rational got = pf.terms[i].residue.constant_value();
        report.residues.push_back({poles[i], got, expected[i]});
        if (got != expected[i]) report.residues_match_scheme = false;
    }

    // Numerator p of the Wronskian p/(s(s-1)(s-t)): its log derivative is
    // [1/s + 1/(s-1) + 1/(s-t)] - a1/a0. Critical values are the first
    // three poles in scheme order {0, 1, t}; integer residues give the
    // factor multiplicities.
    RatExpr s = RatExpr::variable(Var::s);
    RatExpr plog = -p1;
    size_t counted = 0;
    for (size_t i = 0; i < poles.size() && counted < 3; ++i) {
        // the three non-apparent points (scheme order: 0, 1, t)
        if (scheme.entries[i].status != ApparentStatus::apparent) {
            plog += kOne / (s - poles[i]);
            ++counted;
        }
    }
    RatExpr p_reconstructed{rat(1)};
    for (const RatExpr& pole : poles) {
        RatExpr res = residue_at(plog, Var::s, pole);
        if (res.is_zero()) continue;
        if (!res.is_constant() || res.constant_value().get_den() != 1 ||
            res.constant_value() < 0)
            throw StructureMismatchError(
                "wronskian_form_check: Wronskian numerator multiplicity at " + pole.str() +
                " is not a nonnegative integer: " + res.str());
        int mult = static_cast<int>(res.constant_value().get_num().get_si());
        report.p_factors.emplace_back(pole, mult);
        report.p_degree += mult;
        p_reconstructed *= (s - pole).pow(mult);
    }
    RatExpr check = p_reconstructed.derivative(Var::s) / p_reconstructed - plog;
    if (!check.is_zero())
        throw StructureMismatchError(
            "wronskian_form_check: log-derivative reconstruction failed, leftover " + check.str());
    return report;
}

AlgebraicSolution solution_from_a0(const LinearODE2& ode, const QuarticFamily& fam) {
    std::vector<RatExpr> crit = critical_values(fam);
    std::vector<RatExpr> others;
    for (const Location& loc : singular_points(ode)) {
        if (loc.infinite) continue;
        const RatExpr& r = loc.value;
        if (std::find(crit.begin(), crit.end(), r) != crit.end()) continue;
        others.push_back(r);
    }
    // After removing critical values {0, 1, t(a)}, exactly the apparent
    // root must remain.
    RatExpr t;
    for (const RatExpr& cv : crit)
        if (!cv.is_constant()) t = cv;
    if (t.is_zero())
        throw StructureMismatchError("solution_from_a0: no non-constant critical value");
    if (others.size() != 1)
        throw StructureMismatchError("solution_from_a0: expected exactly one non-critical root "
                                     "of a0, found " +
                                     std::to_string(others.size()));
    AlgebraicSolution sol;
    sol.lam_of_a = others[0];
    sol.t_of_a = t;
    sol.validate();
    return sol;
}

}  // namespace pvilab
