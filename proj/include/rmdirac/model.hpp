#pragma once

namespace rmdirac {

/// Rosen-Morse well -v1 sech^2(alpha r) + v2 tanh(alpha r).
/// v1, v2 may take either sign (the Eckart map negates them); alpha and
/// r_e must be positive. r_e is the centrifugal reference radius.
struct PotentialParams {
    double v1 = 0.0;
    double v2 = 0.0;
    double alpha = 1.0;
    double r_e = 1.0;

    void validate() const;
};

enum class Symmetry { Spin, Pseudospin };

/// Units are caller-consistent: energies in whatever unit mc2 is given in,
/// lengths in the inverse unit of alpha, with hbarc bridging the two.
struct PhysicalContext {
    double mc2 = 1.0;
    double hbarc = 1.0;
    Symmetry symmetry = Symmetry::Spin;
    double sym_const = 0.0; // C_s or C_ps depending on the branch

    void validate() const;
};

struct SpinOrbitNumbers {
    int l = 0;     // orbital quantum number of the upper component
    int omega = 0; // kappa (kappa + 1)
};

struct PseudoOrbitNumbers {
    int l_tilde = 0;     // pseudo-orbital quantum number of the lower component
    int omega_tilde = 0; // kappa (kappa - 1)
};

/// l from l(l+1) = kappa(kappa+1) with l >= 0. kappa = 0 is rejected.
SpinOrbitNumbers spin_orbit_numbers(int kappa);

/// l~ from l~(l~+1) = kappa(kappa-1) with l~ >= 0. kappa = 0 is rejected.
PseudoOrbitNumbers pseudospin_numbers(int kappa);

struct QuantumNumbers {
    int n = 0;      // radial
    int kappa = -1; // spin-orbit, nonzero

    void validate() const;
    int l() const { return spin_orbit_numbers(kappa).l; }
    int l_tilde() const { return pseudospin_numbers(kappa).l_tilde; }
    int omega() const { return spin_orbit_numbers(kappa).omega; }
    int omega_tilde() const { return pseudospin_numbers(kappa).omega_tilde; }
    double j() const; // |kappa| - 1/2
};

/// Potential value at radius r > 0 (exponential form, equal to
/// -v1 sech^2 + v2 tanh to machine precision).
double rosen_morse(double r, const PotentialParams& p);

/// One converged analytic level. epsilon is the right-side decay exponent,
/// decay_left the left-side one; delta is the branch radical. All three are
/// positive for a bound state, and epsilon + decay_left + n = delta at the
/// converged energy.
struct BoundState {
    double energy = 0.0;
    double epsilon = 0.0;
    double delta = 0.0;
    double decay_left = 0.0;
    double norm = 0.0;
    QuantumNumbers qn;
    Symmetry branch = Symmetry::Spin;
};

} // namespace rmdirac
