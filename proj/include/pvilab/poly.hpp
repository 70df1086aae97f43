#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pvilab/rational.hpp"

namespace pvilab {

// Fixed global tower of indeterminates, innermost first. Every polynomial
// orders its variables by this enum, so equal polynomials have identical
// representations and all gcds reduce to univariate recursions in the
// outermost variable present.
enum class Var : int {
    a = 0,
    s,
    xi,
    lam,
    mu,
    t,
    v,
    sigma,
    th0,
    th1,
    tht,
    thinf,
};

constexpr int kNumVars = 12;

const char* var_name(Var v);
std::optional<Var> var_from_name(const std::string& name);

// Multivariate polynomial over Q. Sparse map from exponent vectors to
// nonzero rational coefficients, graded-lexicographic term order. The
// variable list is trimmed: a variable appears only if some term uses it.
class Poly {
  public:
    using Exponents = std::vector<int>;

    struct TermOrder {
        bool operator()(const Exponents& x, const Exponents& y) const;
    };

    using TermMap = std::map<Exponents, Rational, TermOrder>;

    Poly() = default;
    static Poly zero() { return Poly(); }
    static Poly constant(const Rational& c);
    static Poly constant(long c) { return constant(rat(c)); }
    static Poly variable(Var v);
    static Poly monomial(const Rational& c, const std::vector<std::pair<Var, int>>& powers);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    // Requires is_constant(); zero polynomial yields 0.
    Rational constant_value() const;

    const std::vector<Var>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool operator==(const Poly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Rational& c) const;
    Poly pow(int e) const;

    int degree(Var v) const;
    int total_degree() const;  // -1 for the zero polynomial
    // Outermost (highest-index) variable actually present.
    std::optional<Var> top_var() const;

    // Coefficient of the graded-lex leading term.
    Rational leading_rational() const;

    // Dense coefficient list in v: result[k] multiplies v^k; coefficients
    // are polynomials without v. Zero polynomial gives {}.
    std::vector<Poly> coeffs_in(Var v) const;
    static Poly from_coeffs(Var v, const std::vector<Poly>& coeffs);
    Poly coeff_of(Var v, int power) const;

    Poly derivative(Var v) const;

    // Fully evaluate at rational values for every present variable.
    Rational eval(const std::map<Var, Rational>& point) const;

    // gcd(numerators)/lcm(denominators) of the coefficients, sign chosen so
    // that dividing by it makes the leading coefficient positive. Zero for
    // the zero polynomial.
    Rational rational_content() const;

    std::string str() const;

  private:
    void insert_term(const Exponents& e, const Rational& c);
    void prune();  // drop zero coefficients, trim unused variables

    std::vector<Var> vars_;
    TermMap terms_;
};

// Exact division; nullopt when d does not divide p over Q[vars].
std::optional<Poly> try_divide(const Poly& p, const Poly& d);
// Division that must succeed (internal invariant); throws otherwise.
Poly exact_divide(const Poly& p, const Poly& d);

// Canonical gcd: integer-primitive with positive leading rational
// coefficient; gcd(0,0) = 0, gcd(p,0) = canonical p. Recursive primitive
// PRS in the outermost variable with the subresultant correction factors.
Poly poly_gcd(const Poly& p, const Poly& q);

// Scale to the canonical associate (integer-primitive, positive leading
// coefficient).
Poly poly_canonical(const Poly& p);

// Exact polynomial square root with rational coefficients, if one exists.
std::optional<Poly> poly_sqrt(const Poly& p);

inline Poly operator*(const Rational& c, const Poly& p) { return p.scaled(c); }

}  // namespace pvilab
