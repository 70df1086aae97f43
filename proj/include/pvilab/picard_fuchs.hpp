#pragma once

#include <array>
#include <vector>

#include "pvilab/garnier.hpp"
#include "pvilab/ode.hpp"
#include "pvilab/upoly.hpp"

namespace pvilab {

// The quartic family Q(xi; a) with fiber relation eta^2 = s - Q. The
// default instance is (3 xi^4 - 4(a+1) xi^3 + 6a xi^2)/(2a-1).
struct QuarticFamily {
    UPoly Q;  // univariate in xi, coefficients in Q(a)

    static QuarticFamily standard();
    UPoly Qprime() const { return Q.derivative(); }
};

// Differential form P(xi) dxi / eta^(2m+1).
struct FormSpec {
    UPoly P;  // numerator, univariate in xi over Q(a)
    int m = 0;

    // d/ds maps P/eta^(2m+1) to -(2m+1)/2 * P / eta^(2m+3).
    FormSpec s_derivative() const;
};

FormSpec form_first_kind();   // d(xi)/eta
FormSpec form_second_kind();  // (3 xi^2 - (2a^2+a+2)) xi d(xi)/eta, residue-free

// One certificate entry: sum_k B[k] * d(xi^k eta^(1-2m)); the exact form
// subtracted during reduction.
struct CertificatePiece {
    UPoly B;
    int m = 0;
};

// Coordinates of a class in the basis {dxi/eta, xi dxi/eta, xi^2 dxi/eta}
// together with the explicit exact form certifying the reduction.
struct ReducedVector {
    std::array<RatExpr, 3> c;  // entries in Q(a, s)
    std::vector<CertificatePiece> certificate;

    bool operator==(const ReducedVector& o) const { return c == o.c; }
};

// Alternative reduction strategies (the results must agree); level_first
// eliminates the highest eta power before reducing xi-degrees, degree_first
// interleaves the other way.
enum class ReductionOrder { level_first, degree_first };

// Reduce a form modulo exact forms using eta^2 = s - Q. The returned
// certificate is verified internally: input - result - d(certificate) = 0
// identically over Q(a, s).
ReducedVector reduce_form(const QuarticFamily& fam, const FormSpec& form,
                          ReductionOrder order = ReductionOrder::level_first);

// Critical values of the fibration: Q at the roots of Q'.
std::vector<RatExpr> critical_values(const QuarticFamily& fam);

// The second-order operator annihilating periods of the form: reduces the
// form and its first two s-derivatives, asserts the 3x3 coordinate matrix
// has rank exactly 2, and clears the kernel relation to polynomial
// coefficients. Throws RankError when the form needs a third-order
// operator.
LinearODE2 derive_pf(const QuarticFamily& fam, const FormSpec& form,
                     ReductionOrder order = ReductionOrder::level_first);

// The printed coefficient triples of the two Picard-Fuchs equations.
enum class LemmaKind { first, second };
LinearODE2 lemma_coefficients(LemmaKind kind);

// Componentwise proportionality factor derived = c * printed with c free
// of s; throws StructureMismatchError (naming the coefficient) otherwise.
RatExpr match_lemma(const LinearODE2& derived, const LinearODE2& printed);

// Structure of the Wronskian of an equation from this family, read off
// a1/a0: residues at the finite singular points against the scheme, and
// the factorization of the Wronskian numerator p(s, a).
struct WronskianReport {
    struct Residue {
        RatExpr point;
        Rational got;
        Rational expected;  // 1 - (exponent sum at the point)
    };
    std::vector<Residue> residues;
    bool residues_match_scheme = false;
    bool reconstruction_exact = false;
    std::vector<std::pair<RatExpr, int>> p_factors;  // (root, multiplicity)
    int p_degree = 0;
};

WronskianReport wronskian_form_check(const LinearODE2& ode);

// Identify t(a) among the non-{0,1} roots of a0 as the one that is a
// critical value of the family; the remaining root is lam(a).
AlgebraicSolution solution_from_a0(const LinearODE2& ode, const QuarticFamily& fam);

}  // namespace pvilab
