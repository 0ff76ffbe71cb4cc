#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rmdirac/model.hpp"
#include "rmdirac/pekeris.hpp"

namespace rmdirac::oracle {

/// Uniform Dirichlet grid. points >= 200; r_min < r_max (negative r_min
/// selects the extended-domain problem the analytic solutions live on).
struct GridSpec {
    double r_min = 0.0;
    double r_max = 0.0;
    int points = 4000;

    void validate() const;
};

enum class CentrifugalMode { Exact, Pekeris };

/// Domain of the comparison eigenproblem. RadialHalfLine is the physical
/// radial problem with a wall near the origin; ExtendedLine is the domain
/// on which the closed-form solutions are exact.
enum class Domain { RadialHalfLine, ExtendedLine };

struct EffectiveProblem {
    std::function<double(double)> u_eff; // potential of -u'' + u_eff u = lambda u
    double target = 0.0;                 // spectral target at this trial energy
};

/// Effective radial problem at trial energy E for the branch in ctx.
/// Pekeris mode replaces 1/r^2 by the approximant (the two coincide when
/// omega = 0, identically).
EffectiveProblem effective_problem(double E, const PotentialParams& p,
                                   const PhysicalContext& ctx, const QuantumNumbers& qn,
                                   CentrifugalMode mode, const pekeris::PekerisCoeffs& coeffs);

/// Lowest `count` eigenvalues of -u'' + u_eff u with Dirichlet ends:
/// three-point discretization, symmetric tridiagonal matrix, Sturm-sequence
/// bisection. Converges O(h^2).
std::vector<double> eigenvalues_fd(const std::function<double(double)>& u_eff,
                                   const GridSpec& grid, int count);

struct OracleResult {
    double energy = 0.0;
    int eigen_index = 0;
    GridSpec grid;
    bool found = false;     // a self-consistent root was located
    bool converged = false; // Richardson error below tolerance, state bound
    double richardson_error = 0.0;
};

struct OracleOptions {
    Domain domain = Domain::RadialHalfLine;
    std::optional<double> e_min;         // window override
    std::optional<double> e_max;
    std::optional<double> target_energy; // pick the root closest to this
    int scan_points = 240;
    int base_points = 4000; // Richardson pairs this with 2x
};

/// Finds E* with lambda_n(E*) = target(E*) by bracketed bisection of the
/// scan grid, Richardson-extrapolated over (N, 2N) points. No sign change
/// in the window yields found = false rather than an exception. Roots whose
/// eigenvalue sits at the discretized continuum edge are flagged
/// unconverged (box artifacts, not bound states).
OracleResult self_consistent_energy(int n, const PotentialParams& p, const PhysicalContext& ctx,
                                    const QuantumNumbers& qn, CentrifugalMode mode,
                                    const pekeris::PekerisCoeffs& coeffs, double tol,
                                    const OracleOptions& opt = {});

/// Nonrelativistic reduction: self-consistent E with
/// -u'' + [omega C(r) + (2 mu/hbar^2) Sigma(r)] u = (2 mu/hbar^2) E u.
OracleResult self_consistent_nonrel(int n, int l, const PotentialParams& p, double mu,
                                    CentrifugalMode mode, const pekeris::PekerisCoeffs& coeffs,
                                    double tol, double hbar = 1.0, const OracleOptions& opt = {});

} // namespace rmdirac::oracle
