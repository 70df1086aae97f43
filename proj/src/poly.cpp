#include "pvilab/poly.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace pvilab {

namespace {

const char* kVarNames[kNumVars] = {"a",  "s",   "xi",  "lam", "mu",  "t",
                                   "v",  "sigma", "th0", "th1", "tht", "thinf"};

// Merge two sorted variable lists.
std::vector<Var> merge_vars(const std::vector<Var>& x, const std::vector<Var>& y) {
    std::vector<Var> out;
    out.reserve(x.size() + y.size());
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

// Remap an exponent vector from `from` variables to the superset `to`.
Poly::Exponents remap(const Poly::Exponents& e, const std::vector<Var>& from,
                      const std::vector<Var>& to) {
    Poly::Exponents out(to.size(), 0);
    size_t j = 0;
    for (size_t i = 0; i < from.size(); ++i) {
        while (to[j] != from[i]) ++j;
        out[j] = e[i];
    }
    return out;
}

Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(const std::string& name) {
    for (int i = 0; i < kNumVars; ++i)
        if (name == kVarNames[i]) return static_cast<Var>(i);
    return std::nullopt;
}

bool Poly::TermOrder::operator()(const Exponents& x, const Exponents& y) const {
    int dx = std::accumulate(x.begin(), x.end(), 0);
    int dy = std::accumulate(y.begin(), y.end(), 0);
    if (dx != dy) return dx < dy;
    // Same arity within one polynomial; compare outermost variable first.
    for (size_t i = x.size(); i-- > 0;) {
        if (x[i] != y[i]) return x[i] < y[i];
    }
    return false;
}

Poly Poly::constant(const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.emplace(Exponents{}, c);
    return p;
}

Poly Poly::variable(Var v) {
    Poly p;
    p.vars_ = {v};
    p.terms_.emplace(Exponents{1}, rat(1));
    return p;
}

Poly Poly::monomial(const Rational& c, const std::vector<std::pair<Var, int>>& powers) {
    Poly p = constant(c);
    for (const auto& [v, e] : powers) p *= Poly::variable(v).pow(e);
    return p;
}

Rational Poly::constant_value() const {
    assert(is_constant());
    return terms_.empty() ? rat(0) : terms_.begin()->second;
}

void Poly::insert_term(const Exponents& e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
    if (vars_.empty()) return;
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<Var> nv;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) nv.push_back(vars_[i]);
    TermMap nt;
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(nv.size());
        for (size_t i = 0; i < e.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        nt.emplace(std::move(ne), c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    Poly out;
    out.vars_ = merge_vars(vars_, o.vars_);
    for (const auto& [e, c] : terms_) out.insert_term(remap(e, vars_, out.vars_), c);
    for (const auto& [e, c] : o.terms_) out.insert_term(remap(e, o.vars_, out.vars_), c);
    out.prune();
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly out;
    out.vars_ = merge_vars(vars_, o.vars_);
    std::vector<std::pair<Exponents, Rational>> lhs, rhs;
    lhs.reserve(terms_.size());
    rhs.reserve(o.terms_.size());
    for (const auto& [e, c] : terms_) lhs.emplace_back(remap(e, vars_, out.vars_), c);
    for (const auto& [e, c] : o.terms_) rhs.emplace_back(remap(e, o.vars_, out.vars_), c);
    Exponents prod(out.vars_.size(), 0);
    for (const auto& [ex, cx] : lhs)
        for (const auto& [ey, cy] : rhs) {
            for (size_t i = 0; i < prod.size(); ++i) prod[i] = ex[i] + ey[i];
            out.insert_term(prod, cx * cy);
        }
    out.prune();
    return out;
}

Poly Poly::scaled(const Rational& c) const {
    if (c == 0) return Poly();
    Poly out = *this;
    for (auto& [e, q] : out.terms_) q *= c;
    return out;
}

Poly Poly::pow(int e) const {
    assert(e >= 0);
    Poly result = Poly::constant(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return result;
}

int Poly::degree(Var v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return 0;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponents& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

std::optional<Var> Poly::top_var() const {
    if (vars_.empty()) return std::nullopt;
    return vars_.back();
}

Rational Poly::leading_rational() const {
    assert(!terms_.empty());
    return terms_.rbegin()->second;
}

std::vector<Poly> Poly::coeffs_in(Var v) const {
    if (is_zero()) return {};
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return {*this};
    size_t idx = static_cast<size_t>(it - vars_.begin());
    std::vector<Poly> out(static_cast<size_t>(degree(v)) + 1);
    std::vector<Var> inner = vars_;
    inner.erase(inner.begin() + static_cast<long>(idx));
    for (auto& p : out) p.vars_ = inner;
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        int k = ne[idx];
        ne.erase(ne.begin() + static_cast<long>(idx));
        out[static_cast<size_t>(k)].terms_.emplace(std::move(ne), c);
    }
    for (auto& p : out) p.prune();
    return out;
}

Poly Poly::from_coeffs(Var v, const std::vector<Poly>& coeffs) {
    Poly out;
    Poly x = Poly::variable(v);
    for (size_t k = coeffs.size(); k-- > 0;) out = out * x + coeffs[k];
    return out;
}

Poly Poly::coeff_of(Var v, int power) const {
    auto cs = coeffs_in(v);
    if (power < 0 || static_cast<size_t>(power) >= cs.size()) return Poly();
    return cs[static_cast<size_t>(power)];
}

Poly Poly::derivative(Var v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return Poly();
    size_t idx = static_cast<size_t>(it - vars_.begin());
    Poly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        Exponents ne = e;
        ne[idx] -= 1;
        out.insert_term(ne, c * e[idx]);
    }
    out.prune();
    return out;
}

Rational Poly::eval(const std::map<Var, Rational>& point) const {
    // Cache powers per variable position.
    std::vector<std::vector<Rational>> powers(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = point.find(vars_[i]);
        if (it == point.end())
            throw UnknownVariableError(std::string("eval: no value for ") + var_name(vars_[i]));
        powers[i] = {rat(1), it->second};
    }
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (size_t i = 0; i < e.size(); ++i) {
            auto& pw = powers[i];
            while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * pw[1]);
            if (e[i] > 0) term *= pw[static_cast<size_t>(e[i])];
        }
        acc += term;
    }
    return acc;
}

Rational Poly::rational_content() const {
    if (terms_.empty()) return rat(0);
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (leading_rational() < 0) content = -content;
    return content;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational ac = rat_abs(c);
        const Exponents& e = it->first;
        bool all_zero = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
        bool printed_coeff = false;
        if (ac != 1 || all_zero) {
            os << ac.get_str();
            printed_coeff = true;
        }
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed_coeff) os << "*";
            os << var_name(vars_[i]);
            if (e[i] > 1) os << "^" << e[i];
            printed_coeff = true;
        }
        first = false;
    }
    return os.str();
}

std::optional<Poly> try_divide(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    if (p.is_zero()) return Poly();
    if (d.is_constant()) return p.scaled(Rational(1) / d.constant_value());

    // Single-divisor multivariate division in graded-lex order; exactness
    // holds iff the remainder stays empty.
    Poly rem = p;
    Poly quot;
    const auto dlead = d.terms().rbegin();
    while (!rem.is_zero()) {
        // Align exponent vectors of the leading terms.
        auto rl = rem.terms().rbegin();
        std::vector<Var> uv;
        std::set_union(rem.vars().begin(), rem.vars().end(), d.vars().begin(), d.vars().end(),
                       std::back_inserter(uv));
        Poly::Exponents re = remap(rl->first, rem.vars(), uv);
        Poly::Exponents de = remap(dlead->first, d.vars(), uv);
        Poly::Exponents qe(uv.size());
        bool divisible = true;
        for (size_t i = 0; i < uv.size(); ++i) {
            qe[i] = re[i] - de[i];
            if (qe[i] < 0) {
                divisible = false;
                break;
            }
        }
        if (!divisible) return std::nullopt;
        std::vector<std::pair<Var, int>> powers;
        for (size_t i = 0; i < uv.size(); ++i)
            if (qe[i] > 0) powers.emplace_back(uv[i], qe[i]);
        Poly qterm = Poly::monomial(rl->second / dlead->second, powers);
        quot += qterm;
        rem -= qterm * d;
    }
    return quot;
}

Poly exact_divide(const Poly& p, const Poly& d) {
    auto q = try_divide(p, d);
    if (!q) throw Error("exact_divide: not divisible: [" + p.str() + "] / [" + d.str() + "]");
    return *q;
}

Poly poly_canonical(const Poly& p) {
    if (p.is_zero()) return p;
    return p.scaled(Rational(1) / p.rational_content());
}

namespace {

// Pseudo-remainder of u by w as univariate in v: lc(w)^(du-dw+1) * u = q*w + r.
Poly pseudo_rem(const Poly& u, const Poly& w, Var v) {
    std::vector<Poly> uc = u.coeffs_in(v);
    std::vector<Poly> wc = w.coeffs_in(v);
    int du = static_cast<int>(uc.size()) - 1;
    int dw = static_cast<int>(wc.size()) - 1;
    assert(dw >= 0 && du >= dw);
    Poly lw = wc.back();
    std::vector<Poly> r = uc;
    for (int k = du; k >= dw; --k) {
        Poly lead = r[static_cast<size_t>(k)];
        for (int i = 0; i <= k; ++i) {
            size_t ui = static_cast<size_t>(i);
            r[ui] = r[ui] * lw;
            int j = i - (k - dw);
            if (j >= 0 && j <= dw) r[ui] -= lead * wc[static_cast<size_t>(j)];
        }
        r[static_cast<size_t>(k)] = Poly();
    }
    return Poly::from_coeffs(v, r);
}

// Content of p with respect to v: gcd of the v-coefficients.
Poly content_in(const Poly& p, Var v) {
    Poly c;
    for (const Poly& q : p.coeffs_in(v)) c = poly_gcd(c, q);
    return c;
}

}  // namespace

Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero()) return poly_canonical(q);
    if (q.is_zero()) return poly_canonical(p);
    if (p.is_constant() || q.is_constant()) return Poly::constant(1);

    Var v = std::max(*p.top_var(), *q.top_var());
    Poly cp = content_in(p, v);
    Poly cq = content_in(q, v);
    Poly cont = poly_gcd(cp, cq);
    Poly A = exact_divide(p, cp);
    Poly B = exact_divide(q, cq);
    if (A.degree(v) < B.degree(v)) std::swap(A, B);

    // Subresultant PRS keeps the coefficient growth of the pseudo-remainder
    // sequence polynomial instead of exponential.
    Poly g = Poly::constant(1);
    Poly h = Poly::constant(1);
    while (true) {
        int delta = A.degree(v) - B.degree(v);
        Poly R = pseudo_rem(A, B, v);
        if (R.is_zero()) break;
        if (R.degree(v) == 0) {
            // Primitive parts are coprime in v.
            return poly_canonical(cont);
        }
        A = B;
        B = exact_divide(R, g * h.pow(delta));
        g = A.coeffs_in(v).back();
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = exact_divide(g.pow(delta), h.pow(delta - 1));
    }
    Poly prim = exact_divide(B, content_in(B, v));
    return poly_canonical(cont * prim);
}

std::optional<Poly> poly_sqrt(const Poly& p) {
    if (p.is_zero()) return Poly();
    if (p.is_constant()) {
        auto r = rational_sqrt(p.constant_value());
        if (!r) return std::nullopt;
        return Poly::constant(*r);
    }
    Var v = *p.top_var();
    std::vector<Poly> c = p.coeffs_in(v);
    int d = static_cast<int>(c.size()) - 1;
    if (d % 2 != 0) return std::nullopt;
    int m = d / 2;
    auto wlead = poly_sqrt(c.back());
    if (!wlead || wlead->is_zero()) return std::nullopt;
    std::vector<Poly> w(static_cast<size_t>(m) + 1);
    w[static_cast<size_t>(m)] = *wlead;
    Poly two_lead = wlead->scaled(rat(2));
    for (int k = m - 1; k >= 0; --k) {
        // Coefficient of v^(m+k) in w^2 must equal c[m+k].
        Poly acc = c[static_cast<size_t>(m + k)];
        for (int i = k + 1; i <= m - 1; ++i) {
            int j = m + k - i;
            if (j <= m && j > i) acc -= w[static_cast<size_t>(i)] * w[static_cast<size_t>(j)].scaled(rat(2));
            if (j == i) acc -= w[static_cast<size_t>(i)] * w[static_cast<size_t>(i)];
        }
        auto wk = try_divide(acc, two_lead);
        if (!wk) return std::nullopt;
        w[static_cast<size_t>(k)] = *wk;
    }
    Poly cand = Poly::from_coeffs(v, w);
    if (cand * cand == p) return cand;
    if (cand * cand == -p) return std::nullopt;
    return std::nullopt;
}

}  // namespace pvilab
