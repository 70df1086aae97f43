#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pvilab/numerics.hpp"
#include "pvilab/ode.hpp"
#include "pvilab/picard_fuchs.hpp"

namespace pvilab {

struct NumericConfig {
    int precision_bits = 53;       // double is the only supported precision
    double quad_tol = 1e-12;       // cross-scheme agreement for periods
    double ode_tol = 1e-12;        // relative tolerance of the continuation
    double radius_factor = 0.25;   // Cauchy-circle radius / distance to nearest singularity
    double report_threshold = 1e-8;

    void validate() const;
};

enum class FormKind { first, second };
FormSpec form_by_kind(FormKind kind);
const char* form_kind_name(FormKind kind);

// A cycle around the branch-point pair (i, j) (indices into the sorted
// root list), optionally detoured through waypoints in the xi-plane.
struct CyclePath {
    int i = 0, j = 1;
    std::vector<Complex> waypoints;
};

struct MonodromyMatrix {
    Matrix2 m = mat_identity();
    Complex base = 0.0;
    std::string loop;  // which singular point the loop encloses

    Complex trace() const { return mat_trace(m); }
    Complex det() const { return mat_det(m); }
    double distance_to_identity() const;
};

// The four branch points of eta^2 = s - Q(xi; a), sorted by (Re, Im).
// Residuals |Q(root) - s| are checked against 1e-12 * max(1, |s|).
std::array<Complex, 4> branch_points(const Rational& a, Complex s);

struct PeriodResult {
    Complex value;
    double scheme_delta;  // |tanh-sinh - Gauss| cross-check
};

// 2x the integral of the form along a path joining the cycle's branch-point
// pair, with eta tracked continuously; the branch reference is canonical
// per unordered pair, so swapping (i, j) negates the value.
PeriodResult period_integral(const Rational& a, Complex s, FormKind kind, const CyclePath& cycle,
                             const NumericConfig& cfg);

struct PfResidualResult {
    double max_residual = 0.0;
    std::vector<double> per_point;
};

// Max over the grid of |a0 x'' + a1 x' + a2 x| / (|a0 x''|+|a1 x'|+|a2 x|+eps)
// where x is the numerically computed period of the form and derivatives
// come from Cauchy-circle quadrature with nearest-neighbor root tracking.
PfResidualResult numeric_pf_residual(const LinearODE2& ode, const Rational& a,
                                     const std::vector<double>& s_grid, FormKind kind,
                                     const NumericConfig& cfg);

enum class LoopTarget { around_0, around_1, around_t, around_lam, around_inf, none };
const char* loop_target_name(LoopTarget t);

// Continuation of the fundamental 2x2 system around a loop from a base
// point on the negative imaginary axis; the loop encloses exactly the
// requested singular point (a large clockwise circle for infinity, a small
// empty loop for `none`).
MonodromyMatrix monodromy_matrix(const LinearODE2& ode, const Rational& a, LoopTarget around,
                                 const NumericConfig& cfg);

struct MonodromySuiteCheck {
    std::string name;
    double value = 0.0;      // measured defect or magnitude
    double threshold = 0.0;  // bound it is compared against
    bool lower_bound = false;  // pass iff value >= threshold instead of <=
    bool pass = false;
};

struct MonodromySuiteReport {
    std::vector<MonodromyMatrix> matrices;
    std::vector<MonodromySuiteCheck> checks;
    std::vector<std::string> product_order;  // composition order used
    double product_defect = 0.0;
    bool pass = false;
};

// Loops around 0, 1, t, lam, infinity and an empty loop; checks the
// apparent point is trivial, the finite points are unipotent and
// nontrivial, infinity is traceless, all determinants are 1, and the
// composition in documented order is the identity.
MonodromySuiteReport monodromy_suite(const Rational& a, FormKind kind, const NumericConfig& cfg);

}  // namespace pvilab
