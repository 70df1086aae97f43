#include "pvilab/ode.hpp"

#include <algorithm>
#include <sstream>

#include "pvilab/partfrac.hpp"
#include "pvilab/upoly.hpp"

namespace pvilab {

namespace {

const RatExpr kZero{rat(0)};
const RatExpr kOne{rat(1)};

RatExpr s_var() { return RatExpr::variable(Var::s); }

// Substitute s -> value, reducing the expression first so removable
// singularities cancel. Throws if a genuine pole remains.
RatExpr eval_s(const RatExpr& f, const RatExpr& value) {
    return f.substitute({{Var::s, value}});
}

}  // namespace

LinearODE2 LinearODE2::make(const Poly& a0, const Poly& a1, const Poly& a2) {
    if (a0.is_zero()) throw Error("LinearODE2: a0 must be nonzero");
    Poly g = poly_gcd(poly_gcd(a0, a1), a2);
    LinearODE2 ode{exact_divide(a0, g), exact_divide(a1, g), exact_divide(a2, g)};
    Rational content = ode.a0.rational_content();
    for (Poly* p : {&ode.a0, &ode.a1, &ode.a2}) *p = p->scaled(Rational(1) / content);
    return ode;
}

LinearODE2 LinearODE2::from_p1p2(const RatExpr& p1, const RatExpr& p2) {
    Poly g = poly_gcd(p1.den(), p2.den());
    Poly lcm = exact_divide(p1.den() * p2.den(), g);
    RatExpr D{lcm};
    RatExpr b1 = D * p1;
    RatExpr b2 = D * p2;
    if (!b1.is_polynomial() || !b2.is_polynomial())
        throw Error("from_p1p2: denominator clearing failed");
    Rational c1 = b1.den().constant_value();
    Rational c2 = b2.den().constant_value();
    return make(lcm, b1.num().scaled(Rational(1) / c1), b2.num().scaled(Rational(1) / c2));
}

std::vector<Location> singular_points(const LinearODE2& ode) {
    std::vector<RatExpr> roots = upoly_roots(UPoly::from_ratexpr(RatExpr(ode.a0), Var::s));

    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i] == roots[j])
                throw DegenerateParameterError("singular_points: repeated root " + roots[i].str());

    std::vector<Location> out;
    for (const RatExpr& r : roots) out.push_back(Location::at(r));
    out.push_back(Location::infinity());
    return out;
}

std::pair<RatExpr, RatExpr> indicial_exponents(const LinearODE2& ode, const Location& point) {
    RatExpr r0, q0;
    if (point.infinite) {
        try {
            r0 = rat(2) - (s_var() * ode.p1()).at_infinity(Var::s);
            q0 = (s_var() * s_var() * ode.p2()).at_infinity(Var::s);
        } catch (const Error&) {
            throw IrregularPointError("irregular singular point at infinity");
        }
    } else {
        RatExpr d = s_var() - point.value;
        try {
            r0 = eval_s(d * ode.p1(), point.value);
            q0 = eval_s(d * d * ode.p2(), point.value);
        } catch (const DegenerateSubstitutionError&) {
            throw IrregularPointError("irregular singular point at " + point.value.str());
        }
    }
    // rho^2 + (r0 - 1) rho + q0 = 0
    RatExpr b = r0 - kOne;
    auto w = ratexpr_sqrt(b * b - rat(4) * q0);
    if (!w)
        throw Error("indicial_exponents: exponents are not rational functions at " + point.str());
    RatExpr lo = (kOne - r0 - *w) / rat(2);
    RatExpr hi = (kOne - r0 + *w) / rat(2);
    if (lo.is_constant() && hi.is_constant() && lo.constant_value() > hi.constant_value())
        std::swap(lo, hi);
    return {lo, hi};
}

ApparentCertificate apparent_test(const LinearODE2& ode, const Location& point) {
    if (point.infinite)
        throw NotApplicableError("apparent_test: only finite points are supported");
    auto [lo, hi] = indicial_exponents(ode, point);
    if (!(lo.is_constant() && lo.constant_value() == 0))
        throw NotApplicableError("apparent_test: exponents at " + point.value.str() +
                                 " are not {0, n}");
    if (!hi.is_constant() || hi.constant_value() <= 0 ||
        hi.constant_value().get_den() != 1)
        throw NotApplicableError("apparent_test: exponent difference at " + point.value.str() +
                                 " is not a positive integer");
    int n = static_cast<int>(hi.constant_value().get_num().get_si());

    // Local expansions around the point: substitute s -> s + s0.
    std::map<Var, RatExpr> shift{{Var::s, s_var() + point.value}};
    UPoly la0 = UPoly::from_ratexpr(RatExpr(ode.a0).substitute(shift), Var::s);
    UPoly la1 = UPoly::from_ratexpr(RatExpr(ode.a1).substitute(shift), Var::s);
    UPoly la2 = UPoly::from_ratexpr(RatExpr(ode.a2).substitute(shift), Var::s);

    if (!la0.coeff(0).is_zero() || la0.coeff(1).is_zero())
        throw NotApplicableError("apparent_test: a0 does not have a simple zero at " +
                                 point.value.str());

    // h_m(c) = a0_m c(c-1) + a1_{m-1} c + a2_{m-2}; the indicial polynomial
    // is f(c) = h_1(c).
    auto h = [&](int m, long c) -> RatExpr {
        Rational cc(c);
        Rational cc1(c - 1);
        return la0.coeff(m) * RatExpr(Rational(cc * cc1)) + la1.coeff(m - 1) * RatExpr(cc) +
               la2.coeff(m - 2);
    };
    auto f = [&](long c) { return h(1, c); };
    if (!f(n).is_zero())
        throw Error("apparent_test: indicial inconsistency at " + point.value.str());

    std::vector<RatExpr> coef{kOne};
    for (int K = 1; K < n; ++K) {
        RatExpr acc;
        for (int j = 0; j < K; ++j) acc += coef[static_cast<size_t>(j)] * h(K + 1 - j, j);
        coef.push_back(-acc / f(K));
    }
    RatExpr obstruction;
    for (int j = 0; j < n; ++j) obstruction += coef[static_cast<size_t>(j)] * h(n + 1 - j, j);

    ApparentCertificate cert;
    cert.n = n;
    cert.obstruction = obstruction;
    cert.status = obstruction.is_zero() ? ApparentStatus::apparent : ApparentStatus::logarithmic;
    return cert;
}

RiemannScheme riemann_scheme(const LinearODE2& ode) {
    RiemannScheme scheme;
    Rational sum(0);
    for (const Location& loc : singular_points(ode)) {
        SchemeEntry entry;
        entry.location = loc;
        std::tie(entry.exponent_lo, entry.exponent_hi) = indicial_exponents(ode, loc);
        if (!entry.exponent_lo.is_constant() || !entry.exponent_hi.is_constant())
            throw Error("riemann_scheme: non-constant exponents at " + loc.str());
        sum += entry.exponent_lo.constant_value() + entry.exponent_hi.constant_value();
        if (!loc.infinite && entry.exponent_lo.constant_value() == 0) {
            Rational n = entry.exponent_hi.constant_value();
            if (n > 0 && n.get_den() == 1)
                entry.status = apparent_test(ode, loc).status;
        }
        scheme.entries.push_back(std::move(entry));
    }
    scheme.fuchs_sum = sum;
    return scheme;
}

std::string RiemannScheme::table_str() const {
    std::vector<std::vector<std::string>> cols;
    for (const auto& e : entries) {
        std::string mark;
        if (e.status == ApparentStatus::apparent) mark = " (apparent)";
        if (e.status == ApparentStatus::logarithmic) mark = " (log)";
        cols.push_back({e.location.str() + mark, e.exponent_lo.str(), e.exponent_hi.str()});
    }
    std::ostringstream os;
    for (size_t row = 0; row < 3; ++row) {
        for (size_t c = 0; c < cols.size(); ++c) {
            size_t width = std::max({cols[c][0].size(), cols[c][1].size(), cols[c][2].size()});
            os << (c ? "  " : "") << cols[c][row] << std::string(width - cols[c][row].size(), ' ');
        }
        os << "\n";
    }
    os << "Fuchs sum = " << fuchs_sum.get_str() << "\n";
    return os.str();
}

LinearODE2 build_e_theta(const Theta& th, const RatExpr& lam, const RatExpr& mu,
                         const RatExpr& t) {
    for (const RatExpr& bad : {t - kZero, t - kOne, lam - kZero, lam - kOne, lam - t})
        if (bad.is_zero())
            throw DegenerateParameterError("build_e_theta: coincident singular points");

    RatExpr s = s_var();
    RatExpr p1 = (kOne - th.th0) / s + (kOne - th.th1) / (s - kOne) + (kOne - th.tht) / (s - t) -
                 kOne / (s - lam);

    Rational k = k_constant(th);
    RatExpr K = hamiltonian_K(th).substitute({{Var::lam, lam}, {Var::mu, mu}, {Var::t, t}});
    RatExpr p2 = RatExpr(k) / (s * (s - kOne)) - t * (t - kOne) * K / (s * (s - kOne) * (s - t)) +
                 lam * (lam - kOne) * mu / (s * (s - kOne) * (s - lam));

    return LinearODE2::from_p1p2(p1, p2);
}

EThetaParams extract_e_theta_params(const LinearODE2& ode) {
    std::vector<Location> points = singular_points(ode);
    if (points.size() != 5)
        throw StructureMismatchError("extract_e_theta_params: expected 5 singular points, found " +
                                     std::to_string(points.size()));

    std::vector<RatExpr> finite;
    for (const auto& p : points)
        if (!p.infinite) finite.push_back(p.value);
    auto take = [&](const RatExpr& v) {
        auto it = std::find(finite.begin(), finite.end(), v);
        if (it == finite.end())
            throw StructureMismatchError("extract_e_theta_params: missing singular point " + v.str());
        finite.erase(it);
    };
    take(kZero);
    take(kOne);

    // The apparent point (exponents {0,2}) is lam; the remaining one is t.
    auto is_apparent_02 = [&](const RatExpr& p) {
        auto [lo, hi] = indicial_exponents(ode, Location::at(p));
        if (!(lo == kZero && hi.is_constant() && hi.constant_value() == 2)) return false;
        return apparent_test(ode, Location::at(p)).status == ApparentStatus::apparent;
    };
    RatExpr lam, t;
    bool c0 = is_apparent_02(finite[0]);
    bool c1 = is_apparent_02(finite[1]);
    if (c0 == c1)
        throw StructureMismatchError(
            "extract_e_theta_params: could not identify a unique apparent point");
    lam = c0 ? finite[0] : finite[1];
    t = c0 ? finite[1] : finite[0];

    RatExpr p1 = ode.p1();
    auto theta_at = [&](const RatExpr& point) -> Rational {
        RatExpr res = residue_at(p1, Var::s, point);
        if (!res.is_constant())
            throw StructureMismatchError("extract_e_theta_params: non-constant residue of p1 at " +
                                         point.str());
        return 1 - res.constant_value();
    };
    // residues of p1
    Theta th;
    th.th0 = theta_at(kZero);
    th.th1 = theta_at(kOne);
    th.tht = theta_at(t);
    {
        RatExpr res_lam = residue_at(p1, Var::s, lam);
        if (!(res_lam.is_constant() && res_lam.constant_value() == -1))
            throw StructureMismatchError(
                "extract_e_theta_params: residue of p1 at the apparent point is not -1");
    }

    auto [einf_lo, einf_hi] = indicial_exponents(ode, Location::infinity());
    if (!einf_lo.is_constant() || !einf_hi.is_constant())
        throw StructureMismatchError("extract_e_theta_params: non-constant exponents at infinity");
    Rational alpha_inf = einf_lo.constant_value();
    th.thinf = einf_hi.constant_value() - alpha_inf;

    RatExpr mu = residue_at(ode.p2(), Var::s, lam);

    EThetaParams out;
    out.theta = th;
    out.lam = lam;
    out.t = t;
    out.mu = mu;
    out.alpha_inf = RatExpr(alpha_inf);
    out.fuchs_constraint =
        (2 * alpha_inf + th.th0 + th.th1 + th.tht + th.thinf + 2 == 3);

    LinearODE2 rebuilt = build_e_theta(th, lam, mu, t);
    out.k_consistent = (rebuilt.p1() == p1) && (rebuilt.p2() == ode.p2());
    return out;
}

}  // namespace pvilab
