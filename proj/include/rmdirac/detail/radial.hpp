#pragma once

// Shared reduction quantities of the radial Rosen-Morse problem and the
// canonical bound-state shape. Internal header: nu, spectra and wavefun
// build on these; they are not part of the public module surface.

#include <cmath>

#include "rmdirac/model.hpp"
#include "rmdirac/pekeris.hpp"

namespace rmdirac::detail {

/// Dimensionless quantities entering every energy formula of one symmetry
/// branch at trial energy E. eps_sq/beta1 are the squared right/left decay
/// exponents of the bound solution; delta is the positive root of
/// delta(delta+1) = beta1 - beta2 + eps_sq.
struct RadialTerms {
    double gamma = 0.0;   // (mc2 + E - C_s)/hbarc^2, or (mc2 - E + C_ps)/hbarc^2
    double omega = 0.0;   // kappa(kappa+1) or kappa(kappa-1)
    double lhs = 0.0;     // product side of the energy equation, energy^2
    double eps_sq = 0.0;
    double beta1 = 0.0;
    double delta_radicand = 0.0;
    double delta = 0.0;   // NaN when the radicand is negative
    double q = 0.0;       // beta1 - eps_sq
};

inline RadialTerms radial_terms(double E, const PotentialParams& p, const PhysicalContext& ctx,
                                int kappa, const pekeris::PekerisCoeffs& c) {
    RadialTerms t;
    const double h2 = ctx.hbarc * ctx.hbarc;
    const double a2 = p.alpha * p.alpha;
    const double re2 = p.r_e * p.r_e;
    const double d0 = c.d0, d1 = c.d1, d2 = c.d2;
    if (ctx.symmetry == Symmetry::Spin) {
        t.omega = static_cast<double>(kappa) * (kappa + 1);
        t.gamma = (ctx.mc2 + E - ctx.sym_const) / h2;
        t.lhs = (ctx.mc2 + E - ctx.sym_const) * (ctx.mc2 - E + p.v2);
        t.eps_sq = (t.omega * d0 / re2 + t.gamma * (ctx.mc2 - E + p.v2)) / (4.0 * a2);
        t.beta1 = (t.omega * (d0 - d1 + d2) / re2 + t.gamma * (ctx.mc2 - E - p.v2)) / (4.0 * a2);
        t.delta_radicand = 1.0 + t.omega * d2 / (a2 * re2) + 4.0 * p.v1 * t.gamma / a2;
    } else {
        t.omega = static_cast<double>(kappa) * (kappa - 1);
        t.gamma = (ctx.mc2 - E + ctx.sym_const) / h2;
        t.lhs = (ctx.mc2 - E + ctx.sym_const) * (ctx.mc2 + E - p.v2);
        t.eps_sq = (t.omega * d0 / re2 + t.gamma * (ctx.mc2 + E - p.v2)) / (4.0 * a2);
        t.beta1 = (t.omega * (d0 - d1 + d2) / re2 + t.gamma * (ctx.mc2 + E + p.v2)) / (4.0 * a2);
        t.delta_radicand = 1.0 + t.omega * d2 / (a2 * re2) - 4.0 * p.v1 * t.gamma / a2;
    }
    t.delta = (t.delta_radicand >= 0.0)
                  ? 0.5 * (-1.0 + std::sqrt(t.delta_radicand))
                  : std::nan("");
    t.q = t.beta1 - t.eps_sq;
    return t;
}

/// s(r) = 1/(1 + exp(2 alpha r)); the bound solutions are Jacobi forms in
/// 1 - 2s = tanh(alpha r).
inline double sigmoid_variable(double r, double alpha) {
    return 1.0 / (1.0 + std::exp(2.0 * alpha * r));
}

/// Unnormalized canonical bound shape
///   s^eps (1-s)^eps_left P_n^{(2 eps, 2 eps_left)}(1 - 2s).
double bound_shape(double r, int n, double eps, double eps_left, double alpha);

/// d/dr of bound_shape, closed form (Jacobi derivative identity).
double bound_shape_derivative(double r, int n, double eps, double eps_left, double alpha);

/// Closed-form normalization constant N with N^2 Int shape^2 dr = 1 over the
/// full real line (terminating sum of 3F2 values at unit argument).
double bound_norm_closed(int n, double eps, double eps_left, double alpha);

/// Same constant by adaptive Gauss-Legendre quadrature of shape^2 with
/// decay-bounded cutoffs. rel_tol is the refinement agreement target.
double bound_norm_quadrature(int n, double eps, double eps_left, double alpha,
                             double rel_tol = 1e-10);

} // namespace rmdirac::detail
