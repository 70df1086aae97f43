#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace pvilab {

using Complex = std::complex<double>;

// Roots of c[0] + c[1] z + ... + c[n] z^n by the Aberth-Ehrlich iteration
// with deterministic starting points; Newton-polished. Throws NumericError
// on non-convergence.
std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs);

// Nodes and weights of tanh-sinh quadrature on (-1, 1) at step h = 2^-level,
// ordered by ascending abscissa. Each node carries its distance delta to
// the nearer endpoint (x = side * (1 - delta)) computed without
// cancellation, so integrands with endpoint singularities keep full
// relative accuracy.
struct TanhSinhNodes {
    struct Node {
        double delta;  // in (0, 1], distance to the endpoint on `side`
        int side;      // -1 or +1
        double w;
    };
    std::vector<Node> nodes;
};
const TanhSinhNodes& tanh_sinh_nodes(int level);

struct QuadratureNodes {
    std::vector<double> x;
    std::vector<double> w;
};

// Gauss-Legendre nodes/weights on (-1, 1), ascending.
const QuadratureNodes& gauss_legendre_nodes(int n);

// Embedded Dormand-Prince 5(4) step control for complex linear systems
// Y' = F(tau, Y), Y a flat array of 4 complex entries (2x2 matrix).
using Matrix2 = std::array<Complex, 4>;

Matrix2 mat_mul(const Matrix2& a, const Matrix2& b);
Matrix2 mat_identity();
Complex mat_det(const Matrix2& m);
Complex mat_trace(const Matrix2& m);
Matrix2 mat_inverse(const Matrix2& m);
double mat_norm(const Matrix2& m);  // Frobenius

// Integrate Y' = F(tau) * Y from tau=0 to 1 with initial value Y0.
// F returns the 2x2 coefficient matrix (already including path speed).
Matrix2 integrate_linear_system(const std::function<Matrix2(double)>& F, const Matrix2& Y0,
                                double rel_tol, double abs_tol);

}  // namespace pvilab
