#pragma once

#include <span>
#include <vector>

#include "rmdirac/model.hpp"
#include "rmdirac/pekeris.hpp"

namespace rmdirac::wavefun {

/// One analytic level with everything needed to evaluate its spinor
/// components. quad_norm (the quadrature normalization of the canonical
/// component) is computed at construction and is the authoritative scale;
/// state.norm carries the closed-form value.
struct SpinorSolution {
    BoundState state;
    PotentialParams params;
    PhysicalContext context;
    pekeris::PekerisCoeffs coeffs;
    double quad_norm = 0.0;
};

SpinorSolution make_solution(const BoundState& state, const PotentialParams& params,
                             const PhysicalContext& context,
                             const pekeris::PekerisCoeffs& coeffs);

/// Normalized upper component F (spin branch): Jacobi form of the canonical
/// bound solution.
double upper_spinor_f(double r, const SpinorSolution& s);

/// Same function through the terminating hypergeometric series route;
/// agrees with the Jacobi form pointwise.
double upper_spinor_f_series(double r, const SpinorSolution& s);

/// Lower component from the first-order operator (F' + kappa F / r)
/// divided by (mc2 + E - C_s); closed-form derivative.
double lower_spinor_g_from_f(double r, const SpinorSolution& s);

struct SpinorPair {
    double g = 0.0;
    double f = 0.0;
};

/// Pseudospin branch: canonical lower component G and the upper component
/// from (G' - kappa G / r)/(mc2 - E + C_ps).
SpinorPair pseudospin_pair(double r, const SpinorSolution& s);

/// Closed-form normalization constant (terminating 3F2 sum).
double normalization_closed_form(const SpinorSolution& s);

/// Normalization constant by adaptive Gauss-Legendre quadrature of the
/// squared canonical component over its full domain.
double normalization_quadrature(const SpinorSolution& s);

/// Scaled residual of the second-order radial equation (with the
/// approximated centrifugal term) at each grid point:
/// [-F'' + u_eff F - target F] / max|F|, derivatives by fourth-order
/// central differences.
std::vector<double> ode_residual(const SpinorSolution& s, std::span<const double> r_grid);

/// Normalized bound solution of the nonrelativistic reduction.
double nonrel_wavefunction(double r, int n, int l, const PotentialParams& p, double mu,
                           const pekeris::PekerisCoeffs& coeffs, double hbar = 1.0);

} // namespace rmdirac::wavefun
