#include "pvilab/periods.hpp"

#include <algorithm>
#include <cmath>

namespace pvilab {

namespace {

constexpr int kTanhSinhLevel = 10;
constexpr int kGaussN = 96;
constexpr int kCircleNodes = 32;

// Suite thresholds (also quoted in the README): the apparent loop and the
// unipotent checks at 1e-8, infinity trace / determinant / product at 1e-6,
// empty loop at 1e-10, nontriviality margin 0.1.
constexpr double kNoneTol = 1e-10;
constexpr double kApparentTol = 1e-8;
constexpr double kUnipotentTol = 1e-8;
constexpr double kInfTol = 1e-6;
constexpr double kProductTol = 1e-6;
constexpr double kNontrivialMargin = 0.1;

double to_d(const Rational& q) { return q.get_d(); }

// Q(xi; a) with a specialized to a rational value.
struct FamilyNum {
    std::array<Complex, 5> q{};

    Complex Q(Complex xi) const {
        Complex acc = 0.0;
        for (size_t k = 5; k-- > 0;) acc = acc * xi + q[k];
        return acc;
    }
};

FamilyNum family_at(const Rational& a) {
    const QuarticFamily fam = QuarticFamily::standard();
    if (Rational(2 * a - 1) == 0)
        throw DegenerateParameterError("family degenerates at a = 1/2");
    FamilyNum out;
    std::map<Var, Rational> at{{Var::a, a}};
    for (int k = 0; k <= 4; ++k) out.q[static_cast<size_t>(k)] = to_d(fam.Q.coeff(k).eval(at));
    return out;
}

std::vector<Complex> form_numerator_at(FormKind kind, const Rational& a) {
    FormSpec spec = form_by_kind(kind);
    std::map<Var, Rational> at{{Var::a, a}};
    std::vector<Complex> out;
    for (int k = 0; k <= spec.P.degree(); ++k) out.push_back(to_d(spec.P.coeff(k).eval(at)));
    return out;
}

Complex eval_poly(const std::vector<Complex>& c, Complex z) {
    Complex acc = 0.0;
    for (size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
}

constexpr size_t kNoEndpoint = 4;

// s - Q(xi) in factored form -q4 * prod(xi - root_i): near a branch point
// the (xi - root) factor is supplied as an exact offset, so the value keeps
// full relative accuracy arbitrarily close to the endpoint.
struct FiberEval {
    std::array<Complex, 4> roots;
    Complex neg_lead;  // -q4

    Complex value(Complex xi, size_t near, Complex offset) const {
        Complex prod = neg_lead;
        for (size_t i = 0; i < 4; ++i) prod *= (i == near) ? offset : (xi - roots[i]);
        return prod;
    }
};

// A quadrature point: xi, and when it hugs a branch point, the index of
// that root plus the exact offset xi - root.
struct NodePoint {
    Complex xi;
    size_t near = kNoEndpoint;
    Complex offset = 0.0;
};

NodePoint generic_point(Complex xi) { return {xi, kNoEndpoint, 0.0}; }

NodePoint endpoint_point(const FiberEval& fib, size_t idx, Complex offset) {
    return {fib.roots[idx] + offset, idx, offset};
}

// Branch tracker: eta = sqrt(s - Q) continued along a sequence of points.
// The sign is chosen so that eta follows the phase of eta^2; steps where
// the fiber value turns by more than ~a quarter turn are bisected.
struct EtaTracker {
    const FiberEval& fib;
    NodePoint prev;
    Complex v_prev, eta_prev;

    EtaTracker(const FiberEval& f, const NodePoint& ref) : fib(f), prev(ref) {
        v_prev = fib.value(ref.xi, ref.near, ref.offset);
        eta_prev = std::sqrt(v_prev);
    }

    Complex at(const NodePoint& p, int depth = 0) {
        Complex v = fib.value(p.xi, p.near, p.offset);
        Complex ratio = v / v_prev;
        if (depth < 40 && ratio.real() < 0.15 * std::abs(ratio)) {
            NodePoint mid;
            if (p.near != kNoEndpoint && p.near == prev.near)
                mid = endpoint_point(fib, p.near, 0.5 * (prev.offset + p.offset));
            else
                mid = generic_point(0.5 * (prev.xi + p.xi));
            at(mid, depth + 1);
            return at(p, depth + 1);
        }
        Complex predicted = eta_prev * std::sqrt(ratio);
        Complex direct = std::sqrt(v);
        Complex eta = (std::abs(direct - predicted) <= std::abs(direct + predicted)) ? direct
                                                                                     : -direct;
        prev = p;
        v_prev = v;
        eta_prev = eta;
        return eta;
    }
};

// Canonical branch reference for an unordered pair of branch points:
// principal square root at a fixed offset from the (Re, Im)-smaller one.
NodePoint pair_reference(const FiberEval& fib, size_t i, size_t j, size_t* base_idx = nullptr) {
    Complex e1 = fib.roots[i], e2 = fib.roots[j];
    bool first_smaller = e1.real() != e2.real() ? e1.real() < e2.real() : e1.imag() <= e2.imag();
    size_t bi = first_smaller ? i : j;
    Complex other = first_smaller ? e2 : e1;
    if (base_idx) *base_idx = bi;
    return endpoint_point(fib, bi, 1e-3 * (other - fib.roots[bi]));
}

struct PathSpec {
    std::vector<Complex> points;  // from branch point to branch point
    size_t from_idx, to_idx;
};

PathSpec build_path(const FiberEval& fib, size_t from_idx, size_t to_idx,
                    const std::vector<Complex>& waypoints) {
    PathSpec path;
    path.from_idx = from_idx;
    path.to_idx = to_idx;
    path.points.push_back(fib.roots[from_idx]);
    for (const Complex& w : waypoints) path.points.push_back(w);
    path.points.push_back(fib.roots[to_idx]);
    return path;
}

void validate_path(const PathSpec& path, const FiberEval& fib) {
    double scale = 0.0;
    for (const Complex& r : fib.roots) scale = std::max(scale, std::abs(r));
    for (size_t ri = 0; ri < 4; ++ri) {
        if (ri == path.from_idx || ri == path.to_idx) continue;
        Complex r = fib.roots[ri];
        for (size_t k = 0; k + 1 < path.points.size(); ++k) {
            Complex u = path.points[k], v = path.points[k + 1];
            Complex d = v - u;
            double len2 = std::norm(d);
            double tproj =
                len2 == 0.0 ? 0.0 : std::clamp((std::conj(d) * (r - u)).real() / len2, 0.0, 1.0);
            double dist = std::abs(r - (u + tproj * d));
            if (dist < 1e-3 * std::max(1.0, scale))
                throw NumericError("cycle path passes too close to a branch point");
        }
    }
}

using Numerator = std::vector<Complex>;

// tanh-sinh along the path; endpoint-hugging nodes carry exact offsets.
Complex integrate_tanh_sinh(const FiberEval& fib, const PathSpec& path, const NodePoint& ref,
                            const Numerator& num) {
    const TanhSinhNodes& nodes = tanh_sinh_nodes(kTanhSinhLevel);
    EtaTracker tracker(fib, ref);
    Complex total = 0.0;
    size_t nseg = path.points.size() - 1;
    for (size_t seg = 0; seg < nseg; ++seg) {
        Complex u = path.points[seg], v = path.points[seg + 1];
        Complex half = 0.5 * (v - u);
        Complex mid = 0.5 * (u + v);
        bool u_branch = (seg == 0);
        bool v_branch = (seg == nseg - 1);
        Complex acc = 0.0;
        for (const auto& node : nodes.nodes) {
            NodePoint p;
            if (node.side > 0) {
                p = v_branch ? endpoint_point(fib, path.to_idx, -half * node.delta)
                             : generic_point(mid + half * (1.0 - node.delta));
            } else {
                p = u_branch ? endpoint_point(fib, path.from_idx, half * node.delta)
                             : generic_point(mid - half * (1.0 - node.delta));
            }
            Complex eta = tracker.at(p);
            acc += node.w * (eval_poly(num, p.xi) / eta);
        }
        total += acc * half;
    }
    return total;
}

// Composite Gauss-Legendre with a u^2 substitution absorbing the
// inverse-square-root endpoint singularities; independent eta tracking.
Complex integrate_gauss(const FiberEval& fib, const PathSpec& path, const NodePoint& ref,
                        const Numerator& num) {
    const QuadratureNodes& nodes = gauss_legendre_nodes(kGaussN);
    EtaTracker tracker(fib, ref);
    Complex total = 0.0;
    size_t nseg = path.points.size() - 1;

    auto eval_at = [&](const NodePoint& p) { return eval_poly(num, p.xi); };

    // One absorbed endpoint: integral over xi = e + span*u^2, u in (0,1),
    // traversed either away from (ascending) or into (descending) e.
    auto singular_half = [&](size_t root_idx, Complex span, bool ascending) {
        Complex acc = 0.0;
        size_t n = nodes.x.size();
        for (size_t step = 0; step < n; ++step) {
            size_t k = ascending ? step : n - 1 - step;
            double uu = 0.5 * (nodes.x[k] + 1.0);
            NodePoint p = endpoint_point(fib, root_idx, span * (uu * uu));
            Complex w = 0.5 * nodes.w[k] * 2.0 * uu * span;
            acc += w * (eval_at(p) / tracker.at(p));
        }
        return acc;
    };

    for (size_t seg = 0; seg < nseg; ++seg) {
        Complex u = path.points[seg], v = path.points[seg + 1];
        bool u_branch = (seg == 0);
        bool v_branch = (seg == nseg - 1);
        if (u_branch && v_branch) {
            Complex mid = 0.5 * (u + v);
            total += singular_half(path.from_idx, mid - u, true);
            total -= singular_half(path.to_idx, mid - v, false);
        } else if (u_branch) {
            total += singular_half(path.from_idx, v - u, true);
        } else if (v_branch) {
            total -= singular_half(path.to_idx, u - v, false);
        } else {
            Complex mid = 0.5 * (u + v), half = 0.5 * (v - u);
            Complex acc = 0.0;
            for (size_t k = 0; k < nodes.x.size(); ++k) {
                NodePoint p = generic_point(mid + half * nodes.x[k]);
                acc += nodes.w[k] * half * (eval_at(p) / tracker.at(p));
            }
            total += acc;
        }
    }
    return total;
}

PeriodResult period_between(const FiberEval& fib, const Numerator& num, size_t from_idx,
                            size_t to_idx, const std::vector<Complex>& waypoints,
                            const NumericConfig& cfg) {
    PathSpec path = build_path(fib, from_idx, to_idx, waypoints);
    validate_path(path, fib);
    NodePoint ref = pair_reference(fib, from_idx, to_idx);
    Complex a_val = integrate_tanh_sinh(fib, path, ref, num);
    Complex b_val = integrate_gauss(fib, path, ref, num);
    double delta = std::abs(a_val - b_val);
    if (delta > cfg.quad_tol * std::max(1.0, std::abs(a_val)))
        throw NumericError("period quadrature schemes disagree: tanh-sinh " +
                           std::to_string(a_val.real()) + "+" + std::to_string(a_val.imag()) +
                           "i vs gauss " + std::to_string(b_val.real()) + "+" +
                           std::to_string(b_val.imag()) + "i");
    return {2.0 * a_val, delta};
}

FiberEval fiber_at(const FamilyNum& fam, const std::array<Complex, 4>& roots) {
    return {roots, -fam.q[4]};
}

// Specialize the three ODE coefficients at a rational a: complex
// polynomials in s.
std::array<std::vector<Complex>, 3> ode_coeffs_at(const LinearODE2& ode, const Rational& a) {
    std::array<std::vector<Complex>, 3> out;
    const Poly* polys[3] = {&ode.a0, &ode.a1, &ode.a2};
    std::map<Var, Rational> at{{Var::a, a}};
    for (int i = 0; i < 3; ++i) {
        for (const Poly& c : polys[i]->coeffs_in(Var::s)) {
            Rational val = c.is_zero() ? rat(0) : c.eval(at);
            out[static_cast<size_t>(i)].push_back(to_d(val));
        }
        if (out[static_cast<size_t>(i)].empty()) out[static_cast<size_t>(i)].push_back(0.0);
    }
    return out;
}

}  // namespace

void NumericConfig::validate() const {
    if (precision_bits != 53)
        throw Error("NumericConfig: only 53-bit (double) precision is supported");
    if (quad_tol <= 0 || ode_tol <= 0 || radius_factor <= 0 || radius_factor >= 1)
        throw Error("NumericConfig: tolerances must be positive (radius factor in (0,1))");
}

FormSpec form_by_kind(FormKind kind) {
    return kind == FormKind::first ? form_first_kind() : form_second_kind();
}

const char* form_kind_name(FormKind kind) { return kind == FormKind::first ? "first" : "second"; }

double MonodromyMatrix::distance_to_identity() const {
    Matrix2 d = m;
    d[0] -= 1.0;
    d[3] -= 1.0;
    return mat_norm(d);
}

std::array<Complex, 4> branch_points(const Rational& a, Complex s) {
    FamilyNum fam = family_at(a);
    std::vector<Complex> coeffs(fam.q.begin(), fam.q.end());
    coeffs[0] -= s;
    std::vector<Complex> roots = poly_roots(coeffs);
    if (roots.size() != 4) throw NumericError("branch_points: quartic degenerated");
    double tol = 1e-12 * std::max(1.0, std::abs(s));
    for (const Complex& r : roots)
        if (std::abs(fam.Q(r) - s) > tol)
            throw NumericError("branch_points: residual " + std::to_string(std::abs(fam.Q(r) - s)) +
                               " exceeds tolerance");
    double sep = 1e9;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j) sep = std::min(sep, std::abs(roots[i] - roots[j]));
    if (sep < 1e-6 * std::max(1.0, std::abs(s)))
        throw NumericError("branch_points: roots nearly collide (s at or near a critical value)");
    return {roots[0], roots[1], roots[2], roots[3]};
}

PeriodResult period_integral(const Rational& a, Complex s, FormKind kind, const CyclePath& cycle,
                             const NumericConfig& cfg) {
    cfg.validate();
    if (cycle.i < 0 || cycle.i > 3 || cycle.j < 0 || cycle.j > 3 || cycle.i == cycle.j)
        throw Error("period_integral: cycle endpoints must be distinct indices in 0..3");
    FamilyNum fam = family_at(a);
    std::array<Complex, 4> roots = branch_points(a, s);
    FiberEval fib = fiber_at(fam, roots);
    Numerator num = form_numerator_at(kind, a);
    return period_between(fib, num, static_cast<size_t>(cycle.i), static_cast<size_t>(cycle.j),
                          cycle.waypoints, cfg);
}

PfResidualResult numeric_pf_residual(const LinearODE2& ode, const Rational& a,
                                     const std::vector<double>& s_grid, FormKind kind,
                                     const NumericConfig& cfg) {
    cfg.validate();
    FamilyNum fam = family_at(a);
    Numerator num = form_numerator_at(kind, a);
    auto coeffs = ode_coeffs_at(ode, a);

    // Singular points of the equation, specialized.
    std::vector<Complex> sing;
    for (const Location& loc : singular_points(ode)) {
        if (loc.infinite) continue;
        std::map<Var, Rational> at{{Var::a, a}};
        sing.push_back(to_d(loc.value.eval(at)));
    }

    PfResidualResult result;
    for (double s0 : s_grid) {
        double dist = 1e300;
        for (const Complex& p : sing) dist = std::min(dist, std::abs(Complex(s0) - p));
        if (dist <= 0.0) throw Error("numeric_pf_residual: grid point is singular");
        double r = cfg.radius_factor * dist;

        // Track the (0,1) branch-point pair around the Cauchy circle.
        std::array<Complex, 4> base_roots = branch_points(a, Complex(s0));
        std::vector<Complex> xs(kCircleNodes);
        Complex pk = base_roots[0], qk = base_roots[1];
        Complex p_first = 0.0, q_first = 0.0;
        for (int k = 0; k <= kCircleNodes; ++k) {
            double angle = 2.0 * M_PI * k / kCircleNodes;
            Complex sk = Complex(s0) + r * Complex(std::cos(angle), std::sin(angle));
            std::array<Complex, 4> rk = branch_points(a, sk);
            auto track = [&](Complex prev) -> size_t {
                double best = 1e300, second = 1e300;
                size_t pick = 0;
                for (size_t idx = 0; idx < 4; ++idx) {
                    double d = std::abs(rk[idx] - prev);
                    if (d < best) {
                        second = best;
                        best = d;
                        pick = idx;
                    } else {
                        second = std::min(second, d);
                    }
                }
                if (best > 0.5 * second)
                    throw NumericError(
                        "numeric_pf_residual: root pairing ambiguous, use a smaller radius");
                return pick;
            };
            size_t pn = track(pk), qn = track(qk);
            if (pn == qn)
                throw NumericError("numeric_pf_residual: tracked roots merged, smaller radius");
            pk = rk[pn];
            qk = rk[qn];
            if (k == kCircleNodes) {
                if (std::abs(pk - p) > 1e-6 || std::abs(qk - q) > 1e-6)
                    throw NumericError(
                        "numeric_pf_residual: root tracking did not close up, smaller radius");
                break;
            }
            FiberEval fib = fiber_at(fam, rk);
            xs[static_cast<size_t>(k)] = period_between(fib, num, pn, qn, {}, cfg).value;
        }

        // Fix residual sign flips from the per-node canonical reference.
        for (int k = 1; k < kCircleNodes; ++k) {
            size_t i = static_cast<size_t>(k);
            if (std::abs(xs[i] - xs[i - 1]) > std::abs(xs[i] + xs[i - 1])) xs[i] = -xs[i];
        }
        if (std::abs(xs[0] - xs[kCircleNodes - 1]) > std::abs(xs[0] + xs[kCircleNodes - 1]))
            throw NumericError("numeric_pf_residual: period branch did not close up");

        Complex c0 = 0.0, c1 = 0.0, c2 = 0.0;
        for (int k = 0; k < kCircleNodes; ++k) {
            double angle = 2.0 * M_PI * k / kCircleNodes;
            Complex w = Complex(std::cos(angle), -std::sin(angle));
            c0 += xs[static_cast<size_t>(k)];
            c1 += xs[static_cast<size_t>(k)] * w;
            c2 += xs[static_cast<size_t>(k)] * w * w;
        }
        c0 /= kCircleNodes;
        c1 /= kCircleNodes;
        c2 /= kCircleNodes;

        Complex x = c0;
        Complex xp = c1 / r;
        Complex xpp = 2.0 * c2 / (r * r);

        Complex t0 = eval_poly(coeffs[0], Complex(s0)) * xpp;
        Complex t1 = eval_poly(coeffs[1], Complex(s0)) * xp;
        Complex t2 = eval_poly(coeffs[2], Complex(s0)) * x;
        double denom = std::abs(t0) + std::abs(t1) + std::abs(t2) + 1e-300;
        double residual = std::abs(t0 + t1 + t2) / denom;
        result.per_point.push_back(residual);
        result.max_residual = std::max(result.max_residual, residual);
    }
    return result;
}

namespace {

struct LoopPiece {
    std::function<Complex(double)> pos;
    std::function<Complex(double)> vel;
};

LoopPiece segment(Complex z0, Complex z1) {
    return {[=](double tau) { return z0 + tau * (z1 - z0); }, [=](double) { return z1 - z0; }};
}

LoopPiece arc(Complex center, double radius, double th0, double th1) {
    return {[=](double tau) {
                double th = th0 + tau * (th1 - th0);
                return center + radius * Complex(std::cos(th), std::sin(th));
            },
            [=](double tau) {
                double th = th0 + tau * (th1 - th0);
                return radius * (th1 - th0) * Complex(-std::sin(th), std::cos(th));
            }};
}

struct SingularLayout {
    Complex p0, p1, pt, plam;
    Complex base;
    double r0, r1, rt, rlam, rinf;
};

SingularLayout layout_points(const LinearODE2& ode, const Rational& a) {
    RiemannScheme scheme = riemann_scheme(ode);
    std::map<Var, Rational> at{{Var::a, a}};
    SingularLayout lay{};
    std::vector<std::pair<Complex, bool>> others;  // (value, apparent)
    for (const auto& e : scheme.entries) {
        if (e.location.infinite) continue;
        Complex z = to_d(e.location.value.eval(at));
        if (std::abs(z) < 1e-12) {
            lay.p0 = z;
        } else if (std::abs(z - 1.0) < 1e-12) {
            lay.p1 = z;
        } else {
            others.emplace_back(z, e.status == ApparentStatus::apparent);
        }
    }
    if (others.size() != 2 || others[0].second == others[1].second)
        throw StructureMismatchError("monodromy: could not identify t and lam points");
    lay.plam = others[0].second ? others[0].first : others[1].first;
    lay.pt = others[0].second ? others[1].first : others[0].first;

    double maxmod = 0.0;
    for (Complex z : {lay.p0, lay.p1, lay.pt, lay.plam}) maxmod = std::max(maxmod, std::abs(z));
    lay.base = Complex(0.0, -(1.0 + 2.0 * maxmod));
    auto radius = [&](Complex p) {
        double d = 1e300;
        for (Complex z : {lay.p0, lay.p1, lay.pt, lay.plam})
            if (z != p) d = std::min(d, std::abs(z - p));
        return d / 3.0;
    };
    lay.r0 = radius(lay.p0);
    lay.r1 = radius(lay.p1);
    lay.rt = radius(lay.pt);
    lay.rlam = radius(lay.plam);
    lay.rinf = 4.0 * (1.0 + maxmod);
    return lay;
}

std::vector<LoopPiece> make_loop(const SingularLayout& lay, LoopTarget target) {
    std::vector<LoopPiece> pieces;
    if (target == LoopTarget::none) {
        double rho = 0.25 * std::abs(lay.base);
        Complex center = lay.base - Complex(0.0, rho);
        pieces.push_back(arc(center, rho, M_PI_2, M_PI_2 + 2.0 * M_PI));
        return pieces;
    }
    if (target == LoopTarget::around_inf) {
        Complex start(0.0, -lay.rinf);
        pieces.push_back(segment(lay.base, start));
        pieces.push_back(arc(0.0, lay.rinf, -M_PI_2, -M_PI_2 - 2.0 * M_PI));
        pieces.push_back(segment(start, lay.base));
        return pieces;
    }
    Complex p;
    double r;
    switch (target) {
        case LoopTarget::around_0: p = lay.p0; r = lay.r0; break;
        case LoopTarget::around_1: p = lay.p1; r = lay.r1; break;
        case LoopTarget::around_t: p = lay.pt; r = lay.rt; break;
        default: p = lay.plam; r = lay.rlam; break;
    }
    Complex dir = (lay.base - p) / std::abs(lay.base - p);
    Complex entry = p + r * dir;
    double th = std::arg(dir);
    pieces.push_back(segment(lay.base, entry));
    pieces.push_back(arc(p, r, th, th + 2.0 * M_PI));
    pieces.push_back(segment(entry, lay.base));
    return pieces;
}

void validate_loop(const std::vector<LoopPiece>& pieces, const SingularLayout& lay) {
    for (const auto& piece : pieces) {
        for (int k = 0; k <= 64; ++k) {
            Complex z = piece.pos(k / 64.0);
            for (auto [p, r] : {std::pair{lay.p0, lay.r0}, std::pair{lay.p1, lay.r1},
                                std::pair{lay.pt, lay.rt}, std::pair{lay.plam, lay.rlam}}) {
                if (std::abs(z - p) < 0.6 * r)
                    throw NumericError("monodromy loop passes too close to a singular point");
            }
        }
    }
}

}  // namespace

const char* loop_target_name(LoopTarget t) {
    switch (t) {
        case LoopTarget::around_0: return "0";
        case LoopTarget::around_1: return "1";
        case LoopTarget::around_t: return "t";
        case LoopTarget::around_lam: return "lambda";
        case LoopTarget::around_inf: return "inf";
        default: return "none";
    }
}

MonodromyMatrix monodromy_matrix(const LinearODE2& ode, const Rational& a, LoopTarget around,
                                 const NumericConfig& cfg) {
    cfg.validate();
    auto coeffs = ode_coeffs_at(ode, a);
    SingularLayout lay = layout_points(ode, a);
    std::vector<LoopPiece> pieces = make_loop(lay, around);
    validate_loop(pieces, lay);

    Matrix2 Y = mat_identity();
    for (const auto& piece : pieces) {
        auto F = [&](double tau) -> Matrix2 {
            Complex s = piece.pos(tau);
            Complex a0 = eval_poly(coeffs[0], s);
            Complex a1 = eval_poly(coeffs[1], s);
            Complex a2 = eval_poly(coeffs[2], s);
            Complex v = piece.vel(tau);
            return {0.0, v, -v * a2 / a0, -v * a1 / a0};
        };
        Y = mat_mul(integrate_linear_system(F, mat_identity(), cfg.ode_tol, cfg.ode_tol), Y);
    }
    MonodromyMatrix out;
    out.m = Y;
    out.base = lay.base;
    out.loop = loop_target_name(around);
    return out;
}

MonodromySuiteReport monodromy_suite(const Rational& a, FormKind kind, const NumericConfig& cfg) {
    cfg.validate();
    LinearODE2 ode =
        lemma_coefficients(kind == FormKind::first ? LemmaKind::first : LemmaKind::second);
    SingularLayout lay = layout_points(ode, a);

    MonodromySuiteReport report;
    std::map<LoopTarget, MonodromyMatrix> M;
    for (LoopTarget t : {LoopTarget::none, LoopTarget::around_0, LoopTarget::around_1,
                         LoopTarget::around_t, LoopTarget::around_lam, LoopTarget::around_inf}) {
        M[t] = monodromy_matrix(ode, a, t, cfg);
        report.matrices.push_back(M[t]);
    }

    auto add_check = [&](const std::string& name, double value, double threshold,
                         bool lower = false) {
        bool pass = lower ? value >= threshold : value <= threshold;
        report.checks.push_back({name, value, threshold, lower, pass});
    };

    add_check("none_is_identity", M[LoopTarget::none].distance_to_identity(), kNoneTol);
    add_check("lambda_is_identity", M[LoopTarget::around_lam].distance_to_identity(),
              kApparentTol);
    for (auto [target, label] :
         {std::pair{LoopTarget::around_0, std::string("0")},
          std::pair{LoopTarget::around_1, std::string("1")},
          std::pair{LoopTarget::around_t, std::string("t")}}) {
        add_check("trace_minus_2_at_" + label, std::abs(M[target].trace() - 2.0), kUnipotentTol);
        add_check("det_minus_1_at_" + label, std::abs(M[target].det() - 1.0), kUnipotentTol);
        add_check("nontrivial_at_" + label, M[target].distance_to_identity(), kNontrivialMargin,
                  true);
    }
    add_check("trace_at_inf", std::abs(M[LoopTarget::around_inf].trace()), kInfTol);
    add_check("det_minus_1_at_inf", std::abs(M[LoopTarget::around_inf].det() - 1.0), kInfTol);
    add_check("det_minus_1_at_lambda", std::abs(M[LoopTarget::around_lam].det() - 1.0),
              kUnipotentTol);

    // Compose finite loops in ascending argument as seen from the base
    // point; continuation matrices multiply right-to-left, and the big
    // clockwise circle inverts the product.
    std::vector<std::pair<double, LoopTarget>> order;
    for (auto [target, p] : {std::pair{LoopTarget::around_0, lay.p0},
                             std::pair{LoopTarget::around_1, lay.p1},
                             std::pair{LoopTarget::around_t, lay.pt},
                             std::pair{LoopTarget::around_lam, lay.plam}})
        order.emplace_back(std::arg(p - lay.base), target);
    std::sort(order.begin(), order.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    Matrix2 prod = mat_identity();
    for (const auto& [angle, target] : order) {
        prod = mat_mul(M[target].m, prod);
        report.product_order.push_back(loop_target_name(target));
    }
    prod = mat_mul(M[LoopTarget::around_inf].m, prod);
    report.product_order.push_back("inf");
    Matrix2 defect = prod;
    defect[0] -= 1.0;
    defect[3] -= 1.0;
    report.product_defect = mat_norm(defect);
    add_check("product_relation", report.product_defect, kProductTol);

    report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const MonodromySuiteCheck& c) { return c.pass; });
    return report;
}

}  // namespace pvilab
