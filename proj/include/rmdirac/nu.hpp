#pragma once

#include <functional>
#include <stdexcept>

#include "rmdirac/model.hpp"
#include "rmdirac/pekeris.hpp"

namespace rmdirac::nu {

/// Parametric hypergeometric-type problem
///   [r(c3-c4 r)]^2 psi'' + r(c3-c4 r)(c1-c2 r) psi' + (-xi1 r^2 + xi2 r - xi3) psi = 0.
struct NUProblem {
    double c1 = 0.0, c2 = 0.0, c3 = 1.0, c4 = 0.0;
    double xi1 = 0.0, xi2 = 0.0, xi3 = 0.0;
};

/// Derived constants c5..c16. For c4 = 0 the Jacobi-specific c12 and c14
/// are infinite; the Laguerre-limit constants c15, c16 stay finite.
struct NUDerived {
    double c5 = 0.0, c6 = 0.0, c7 = 0.0, c8 = 0.0, c9 = 0.0, c10 = 0.0;
    double c11 = 0.0, c12 = 0.0, c13 = 0.0, c14 = 0.0, c15 = 0.0, c16 = 0.0;
};

/// Thrown when c9 or c10 comes out negative: no real solution branch.
struct NoRealBranch : std::domain_error {
    double offending_value;
    explicit NoRealBranch(const char* which, double value);
};

NUDerived derive(const NUProblem& p);

/// pi(r) = pi_const + pi_slope r; tau(r) = tau_const + tau_slope r.
struct KeyPolynomials {
    double pi_const = 0.0, pi_slope = 0.0;
    double k = 0.0;
    double tau_const = 0.0, tau_slope = 0.0;
};

/// Throws std::domain_error when tau' >= 0 (negativity condition violated).
KeyPolynomials key_polynomials(const NUProblem& p, const NUDerived& d);

/// Quantization residual: zero exactly at the n-th quantized level.
double energy_relation(const NUProblem& p, const NUDerived& d, int n);

/// r -> r^{c13} (c3 - c4 r)^{c14} P_n^{(c11, c12)}(c3 - 2 c4 r), up to
/// normalization. Parameter-range violations name the failing constant.
std::function<double(double)> wavefunction_factory(const NUProblem& p, const NUDerived& d, int n);

/// Degenerate c4 = 0 form exp(-c16 r) L_n^{(c11)}(c15 r). Rejects c4 != 0.
double laguerre_limit(const NUProblem& p, const NUDerived& d, int n, double r);

/// Rosen-Morse instance in the variable s = 1/(1 + exp(2 alpha r)), the
/// form whose energy_relation quantizes the normalizable bound states and
/// whose wavefunction_factory yields them directly (c = (1,2,1,1)).
NUProblem rosen_morse_instance(const PotentialParams& p, const PhysicalContext& ctx,
                               const QuantumNumbers& qn, double E,
                               const pekeris::PekerisCoeffs& coeffs);

/// Rosen-Morse instance in the raw exponential variable (c = (1,1,1,1),
/// xi = (beta1, beta2, eps^2)); reproduces the published constant table and
/// the printed key polynomials. Kept for cross-checks; its energy_relation
/// selects a non-normalizable branch and is not used for the spectrum.
NUProblem rosen_morse_exponential_instance(const PotentialParams& p, const PhysicalContext& ctx,
                                           const QuantumNumbers& qn, double E,
                                           const pekeris::PekerisCoeffs& coeffs);

} // namespace rmdirac::nu
