#pragma once

#include <vector>

namespace rmdirac::specfun {

/// Gauss-Legendre rule on (-1, 1). Nodes are strictly increasing and
/// symmetric about zero; weights sum to 2.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// ln Gamma(x) for x > 0, Lanczos approximation. Throws std::domain_error
/// at the poles (x <= 0).
double ln_gamma(double x);

/// Rising factorial (x)_m = x (x+1) ... (x+m-1), product form.
/// Defined for every real x; (x)_0 = 1.
double pochhammer(double x, int m);

/// Jacobi polynomial P_n^{(a,b)}(x) by the three-term recurrence.
/// Requires a > -1 and b > -1.
double jacobi_p(int n, double a, double b, double x);

/// d/dx P_n^{(a,b)}(x) = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)}(x).
double jacobi_p_derivative(int n, double a, double b, double x);

/// Generalized Laguerre polynomial L_n^{(a)}(x).
double laguerre_l(int n, double a, double x);

/// Gauss hypergeometric series 2F1(a,b;c;z). Accepts terminating series
/// (a or b a non-positive integer) for any z, otherwise requires |z| < 1
/// and c not a non-positive integer. Terms are accumulated until the
/// relative contribution falls below 1e-16; a 1e6-term cap throws.
double hyp2f1(double a, double b, double c, double z);

/// Terminating 3F2 at unit argument:
///   sum_p (a1)_p (a2)_p (a3)_p / [(b1)_p (b2)_p p!].
/// At least one of a1, a2, a3 must be a non-positive integer.
double hyp3f2_unit(double a1, double a2, double a3, double b1, double b2);

/// Gauss-Legendre nodes/weights by Newton iteration on Legendre
/// polynomials; integrates polynomials of degree <= 2 npts - 1 exactly.
/// Accepts 2 <= npts <= 512.
QuadratureRule gauss_legendre(int npts);

} // namespace rmdirac::specfun
