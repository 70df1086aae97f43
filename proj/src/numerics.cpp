#include "pvilab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "pvilab/error.hpp"

namespace pvilab {

namespace {

Complex poly_eval(const std::vector<Complex>& c, Complex z) {
    Complex acc = 0.0;
    for (size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
}

Complex poly_eval_deriv(const std::vector<Complex>& c, Complex z) {
    Complex acc = 0.0;
    for (size_t k = c.size(); k-- > 1;) acc = acc * z + c[k] * static_cast<double>(k);
    return acc;
}

}  // namespace

std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs) {
    std::vector<Complex> c = coeffs;
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() < 2) throw NumericError("poly_roots: degree < 1");
    size_t n = c.size() - 1;

    // Deterministic start: circle of the Fujiwara-type bound, angles offset
    // off any symmetry axis.
    double radius = 0.0;
    for (size_t k = 0; k < n; ++k) {
        double b = std::pow(std::abs(c[k] / c[n]), 1.0 / static_cast<double>(n - k));
        radius = std::max(radius, 2.0 * b);
    }
    if (radius == 0.0) radius = 1.0;
    Complex center = -c[n - 1] / (static_cast<double>(n) * c[n]);
    std::vector<Complex> z(n);
    for (size_t k = 0; k < n; ++k) {
        double angle = 2.0 * M_PI * (static_cast<double>(k) + 0.25) / static_cast<double>(n) + 0.4;
        z[k] = center + radius * Complex(std::cos(angle), std::sin(angle));
    }

    double scale = 0.0;
    for (const Complex& q : c) scale = std::max(scale, std::abs(q));

    bool converged = false;
    for (int iter = 0; iter < 400 && !converged; ++iter) {
        converged = true;
        for (size_t k = 0; k < n; ++k) {
            Complex p = poly_eval(c, z[k]);
            Complex dp = poly_eval_deriv(c, z[k]);
            if (std::abs(p) == 0.0) continue;
            Complex newton = p / dp;
            Complex sum = 0.0;
            for (size_t j = 0; j < n; ++j)
                if (j != k) sum += 1.0 / (z[k] - z[j]);
            Complex delta = newton / (1.0 - newton * sum);
            z[k] -= delta;
            if (std::abs(delta) > 1e-14 * (1.0 + std::abs(z[k]))) converged = false;
        }
    }
    if (!converged) throw NumericError("poly_roots: Aberth iteration did not converge");

    for (size_t k = 0; k < n; ++k)
        for (int polish = 0; polish < 2; ++polish) {
            Complex dp = poly_eval_deriv(c, z[k]);
            if (std::abs(dp) == 0.0) break;
            z[k] -= poly_eval(c, z[k]) / dp;
        }

    std::sort(z.begin(), z.end(), [](const Complex& x, const Complex& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return z;
}

const TanhSinhNodes& tanh_sinh_nodes(int level) {
    static std::map<int, TanhSinhNodes> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(level);
    if (it != cache.end()) return it->second;

    TanhSinhNodes nodes;
    double h = std::ldexp(1.0, -level);
    int kmax = static_cast<int>(std::ceil(4.3 / h));
    for (int k = -kmax; k <= kmax; ++k) {
        double u = k * h;
        double au = std::abs(u);
        double y = M_PI_2 * std::sinh(au);
        // 1 - tanh(y) without cancellation.
        double delta = 2.0 / (std::exp(2.0 * y) + 1.0);
        double ch = std::cosh(y);
        double w = h * M_PI_2 * std::cosh(au) / (ch * ch);
        if (delta < 1e-32 || w < 1e-320) continue;
        nodes.nodes.push_back({delta, k >= 0 ? +1 : -1, w});
    }
    return cache.emplace(level, std::move(nodes)).first->second;
}

const QuadratureNodes& gauss_legendre_nodes(int n) {
    static std::map<int, QuadratureNodes> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    QuadratureNodes nodes;
    nodes.x.resize(static_cast<size_t>(n));
    nodes.w.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Newton from the Chebyshev-like initial guess.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        nodes.x[static_cast<size_t>(n - 1 - i)] = x;
        nodes.w[static_cast<size_t>(n - 1 - i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return cache.emplace(n, std::move(nodes)).first->second;
}

Matrix2 mat_mul(const Matrix2& a, const Matrix2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

Matrix2 mat_identity() { return {1.0, 0.0, 0.0, 1.0}; }

Complex mat_det(const Matrix2& m) { return m[0] * m[3] - m[1] * m[2]; }

Complex mat_trace(const Matrix2& m) { return m[0] + m[3]; }

Matrix2 mat_inverse(const Matrix2& m) {
    Complex d = mat_det(m);
    if (std::abs(d) == 0.0) throw NumericError("mat_inverse: singular matrix");
    return {m[3] / d, -m[1] / d, -m[2] / d, m[0] / d};
}

double mat_norm(const Matrix2& m) {
    double acc = 0.0;
    for (const Complex& e : m) acc += std::norm(e);
    return std::sqrt(acc);
}

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kE[7] = {35.0 / 384 - 5179.0 / 57600, 0.0,
                          500.0 / 1113 - 7571.0 / 16695, 125.0 / 192 - 393.0 / 640,
                          -2187.0 / 6784 + 92097.0 / 339200, 11.0 / 84 - 187.0 / 2100,
                          -1.0 / 40};

Matrix2 axpy(const Matrix2& y, double c, const Matrix2& x) {
    Matrix2 out = y;
    for (int i = 0; i < 4; ++i) out[static_cast<size_t>(i)] += c * x[static_cast<size_t>(i)];
    return out;
}

}  // namespace

Matrix2 integrate_linear_system(const std::function<Matrix2(double)>& F, const Matrix2& Y0,
                                double rel_tol, double abs_tol) {
    Matrix2 y = Y0;
    double tau = 0.0;
    double h = 1e-3;
    int steps = 0;
    while (tau < 1.0) {
        if (++steps > 2000000) throw NumericError("integrate_linear_system: too many steps");
        if (tau + h > 1.0) h = 1.0 - tau;
        std::array<Matrix2, 7> k;
        for (int stage = 0; stage < 7; ++stage) {
            Matrix2 yi = y;
            for (int j = 0; j < stage; ++j)
                yi = axpy(yi, h * kA[stage][j], k[static_cast<size_t>(j)]);
            k[static_cast<size_t>(stage)] = mat_mul(F(tau + kC[stage] * h), yi);
        }
        Matrix2 y5 = y;
        for (int j = 0; j < 6; ++j) y5 = axpy(y5, h * kA[6][j], k[static_cast<size_t>(j)]);
        Matrix2 err{};
        for (int j = 0; j < 7; ++j) err = axpy(err, h * kE[j], k[static_cast<size_t>(j)]);
        double scale = abs_tol + rel_tol * std::max(mat_norm(y), mat_norm(y5));
        double e = mat_norm(err) / scale;
        if (e <= 1.0) {
            tau += h;
            y = y5;
        }
        double factor = (e > 0.0) ? 0.9 * std::pow(e, -0.2) : 5.0;
        factor = std::clamp(factor, 0.2, 5.0);
        h *= factor;
        if (h < 1e-13)
            throw NumericError("integrate_linear_system: step size collapse near tau = " +
                               std::to_string(tau));
    }
    return y;
}

}  // namespace pvilab
