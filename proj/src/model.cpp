#include "rmdirac/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rmdirac {

void PotentialParams::validate() const {
    if (!(alpha > 0.0)) {
        throw std::invalid_argument("PotentialParams: alpha must be positive");
    }
    if (!(r_e > 0.0)) {
        throw std::invalid_argument("PotentialParams: r_e must be positive");
    }
    if (!std::isfinite(v1) || !std::isfinite(v2)) {
        throw std::invalid_argument("PotentialParams: well depths must be finite");
    }
}

void PhysicalContext::validate() const {
    if (!(mc2 > 0.0)) {
        throw std::invalid_argument("PhysicalContext: mc2 must be positive");
    }
    if (!(hbarc > 0.0)) {
        throw std::invalid_argument("PhysicalContext: hbarc must be positive");
    }
}

SpinOrbitNumbers spin_orbit_numbers(int kappa) {
    if (kappa == 0) {
        throw std::invalid_argument("spin_orbit_numbers: kappa = 0 is not a valid "
                                    "Dirac spin-orbit number");
    }
    SpinOrbitNumbers out;
    out.omega = kappa * (kappa + 1);
    out.l = (kappa > 0) ? kappa : -kappa - 1;
    return out;
}

PseudoOrbitNumbers pseudospin_numbers(int kappa) {
    if (kappa == 0) {
        throw std::invalid_argument("pseudospin_numbers: kappa = 0 is not a valid "
                                    "Dirac spin-orbit number");
    }
    PseudoOrbitNumbers out;
    out.omega_tilde = kappa * (kappa - 1);
    out.l_tilde = (kappa > 0) ? kappa - 1 : -kappa;
    return out;
}

void QuantumNumbers::validate() const {
    if (n < 0) {
        throw std::invalid_argument("QuantumNumbers: n must be non-negative");
    }
    if (kappa == 0) {
        throw std::invalid_argument("QuantumNumbers: kappa must be nonzero");
    }
}

double QuantumNumbers::j() const {
    return std::abs(kappa) - 0.5;
}

double rosen_morse(double r, const PotentialParams& p) {
    if (!(r > 0.0)) {
        throw std::invalid_argument("rosen_morse: r must be positive, got " + std::to_string(r));
    }
    const double x = std::exp(-2.0 * p.alpha * r);
    const double d = 1.0 + x;
    return -4.0 * p.v1 * x / (d * d) + p.v2 * (1.0 - x) / d;
}

} // namespace rmdirac
