#include "rmdirac/nu.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "rmdirac/detail/radial.hpp"
#include "rmdirac/specfun.hpp"

namespace rmdirac::nu {

NoRealBranch::NoRealBranch(const char* which, double value)
    : std::domain_error(std::string("no real NU branch: ") + which + " = " +
                        std::to_string(value) + " is negative"),
      offending_value(value) {}

NUDerived derive(const NUProblem& p) {
    if (!(p.c3 > 0.0)) {
        throw std::invalid_argument("derive: c3 must be positive");
    }
    NUDerived d;
    d.c5 = 0.5 * (p.c3 - p.c1);
    d.c6 = 0.5 * (p.c2 - 2.0 * p.c4);
    d.c7 = d.c6 * d.c6 + p.xi1;
    d.c8 = 2.0 * d.c5 * d.c6 - p.xi2;
    d.c9 = d.c5 * d.c5 + p.xi3;
    d.c10 = p.c4 * (p.c3 * d.c8 + p.c4 * d.c9) + p.c3 * p.c3 * d.c7;
    if (d.c9 < 0.0) {
        throw NoRealBranch("c9", d.c9);
    }
    if (d.c10 < 0.0) {
        throw NoRealBranch("c10", d.c10);
    }
    const double s9 = std::sqrt(d.c9);
    const double s10 = std::sqrt(d.c10);
    d.c11 = 2.0 * s9 / p.c3;
    d.c13 = (d.c5 + s9) / p.c3;
    d.c15 = 2.0 * s10 / p.c3;
    d.c16 = (s10 - p.c4 * d.c5 - p.c3 * d.c6) / p.c3;
    if (p.c4 != 0.0) {
        d.c12 = 2.0 * s10 / (p.c3 * p.c4);
        d.c14 = (s10 - p.c4 * d.c5 - p.c3 * d.c6) / (p.c3 * p.c4);
    } else {
        d.c12 = std::numeric_limits<double>::infinity();
        d.c14 = std::numeric_limits<double>::infinity();
    }
    return d;
}

KeyPolynomials key_polynomials(const NUProblem& p, const NUDerived& d) {
    const double s9 = std::sqrt(d.c9);
    const double s10 = std::sqrt(d.c10);
    KeyPolynomials k;
    k.pi_const = d.c5 + s9;
    k.pi_slope = -(p.c4 * s9 + s10 - p.c3 * d.c6) / p.c3;
    k.k = -(p.c3 * d.c8 + 2.0 * p.c4 * d.c9 + 2.0 * std::sqrt(d.c9 * d.c10)) / (p.c3 * p.c3);
    k.tau_const = p.c3 + 2.0 * s9;
    k.tau_slope = -2.0 * (p.c3 * p.c4 + p.c4 * s9 + s10) / p.c3;
    if (!(k.tau_slope < 0.0)) {
        throw std::domain_error("key_polynomials: negativity condition violated, tau' = " +
                                std::to_string(k.tau_slope));
    }
    return k;
}

double energy_relation(const NUProblem& p, const NUDerived& d, int n) {
    if (n < 0) {
        throw std::invalid_argument("energy_relation: n must be non-negative");
    }
    const double s9 = std::sqrt(d.c9);
    const double s10 = std::sqrt(d.c10);
    return p.c2 * n - (2.0 * n + 1.0) * d.c6 +
           (2.0 * n + 1.0) * (s10 + p.c4 * s9) / p.c3 + n * (n - 1.0) * p.c4 +
           (p.c3 * d.c8 + 2.0 * p.c4 * d.c9 + 2.0 * std::sqrt(d.c9 * d.c10)) / (p.c3 * p.c3);
}

std::function<double(double)> wavefunction_factory(const NUProblem& p, const NUDerived& d,
                                                   int n) {
    if (n < 0) {
        throw std::invalid_argument("wavefunction_factory: n must be non-negative");
    }
    if (!(d.c11 > -1.0)) {
        throw std::domain_error("wavefunction_factory: c11 = " + std::to_string(d.c11) +
                                " violates c11 > -1");
    }
    if (!(d.c12 > -1.0)) {
        throw std::domain_error("wavefunction_factory: c12 = " + std::to_string(d.c12) +
                                " violates c12 > -1");
    }
    if (!(d.c13 > 0.0)) {
        throw std::domain_error("wavefunction_factory: c13 = " + std::to_string(d.c13) +
                                " violates c13 > 0");
    }
    if (!(d.c14 > 0.0)) {
        throw std::domain_error("wavefunction_factory: c14 = " + std::to_string(d.c14) +
                                " violates c14 > 0");
    }
    const double c3 = p.c3, c4 = p.c4;
    const double c11 = d.c11, c12 = d.c12, c13 = d.c13, c14 = d.c14;
    return [=](double z) {
        return std::pow(z, c13) * std::pow(c3 - c4 * z, c14) *
               specfun::jacobi_p(n, c11, c12, c3 - 2.0 * c4 * z);
    };
}

double laguerre_limit(const NUProblem& p, const NUDerived& d, int n, double r) {
    if (p.c4 != 0.0) {
        throw std::invalid_argument("laguerre_limit: requires c4 = 0");
    }
    return std::exp(-d.c16 * r) * specfun::laguerre_l(n, d.c11, d.c15 * r);
}

namespace {

NUProblem make_instance(const PotentialParams& p, const PhysicalContext& ctx,
                        const QuantumNumbers& qn, double E,
                        const pekeris::PekerisCoeffs& coeffs, bool sigmoid_form) {
    p.validate();
    ctx.validate();
    qn.validate();
    const int kappa = qn.kappa;
    const auto t = detail::radial_terms(E, p, ctx, kappa, coeffs);
    if (!(t.eps_sq > 0.0)) {
        throw std::domain_error("rosen_morse instance: outside bound-state window "
                                "(eps^2 = " + std::to_string(t.eps_sq) + " <= 0)");
    }
    const double a2 = p.alpha * p.alpha;
    const double re2 = p.r_e * p.r_e;
    NUProblem out;
    if (sigmoid_form) {
        out.c1 = 1.0;
        out.c2 = 2.0;
        out.c3 = 1.0;
        out.c4 = 1.0;
        const double sgn = (ctx.symmetry == Symmetry::Spin) ? 1.0 : -1.0;
        out.xi1 = (t.omega * coeffs.d2 / re2 + sgn * 4.0 * p.v1 * t.gamma) / (4.0 * a2);
        out.xi2 = (t.omega * coeffs.d1 / re2 + sgn * (4.0 * p.v1 + 2.0 * p.v2) * t.gamma) /
                  (4.0 * a2);
        out.xi3 = t.eps_sq;
    } else {
        // exponential variable: xi = (beta1, beta2, eps^2)
        out.c1 = 1.0;
        out.c2 = 1.0;
        out.c3 = 1.0;
        out.c4 = 1.0;
        out.xi1 = t.beta1;
        const double mass_term = (ctx.symmetry == Symmetry::Spin)
                                     ? 2.0 * t.gamma * (ctx.mc2 - E - 2.0 * p.v1)
                                     : 2.0 * t.gamma * (ctx.mc2 + E + 2.0 * p.v1);
        out.xi2 = (t.omega * (2.0 * coeffs.d0 - coeffs.d1) / re2 + mass_term) / (4.0 * a2);
        out.xi3 = t.eps_sq;
    }
    return out;
}

} // namespace

NUProblem rosen_morse_instance(const PotentialParams& p, const PhysicalContext& ctx,
                               const QuantumNumbers& qn, double E,
                               const pekeris::PekerisCoeffs& coeffs) {
    return make_instance(p, ctx, qn, E, coeffs, true);
}

NUProblem rosen_morse_exponential_instance(const PotentialParams& p, const PhysicalContext& ctx,
                                           const QuantumNumbers& qn, double E,
                                           const pekeris::PekerisCoeffs& coeffs) {
    return make_instance(p, ctx, qn, E, coeffs, false);
}

} // namespace rmdirac::nu
