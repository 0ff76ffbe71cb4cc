#include "rmdirac/wavefun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rmdirac/detail/radial.hpp"
#include "rmdirac/spectra.hpp"
#include "rmdirac/specfun.hpp"

namespace rmdirac::wavefun {

namespace {

void check_state(const SpinorSolution& s) {
    if (!(s.state.epsilon > 0.0) || !(s.state.delta > 0.0) || !(s.state.decay_left > 0.0)) {
        throw std::invalid_argument("SpinorSolution: state violates bound-state invariants "
                                    "(epsilon, delta and left decay must be positive)");
    }
}

double denominator_spin(const SpinorSolution& s) {
    const double den = s.context.mc2 + s.state.energy - s.context.sym_const;
    if (std::fabs(den) < 1e-12 * s.context.mc2) {
        throw std::domain_error("lower_spinor_g_from_f: E = -mc2 + C_s makes the coupling "
                                "operator singular");
    }
    return den;
}

double denominator_pseudo(const SpinorSolution& s) {
    const double den = s.context.mc2 - s.state.energy + s.context.sym_const;
    if (std::fabs(den) < 1e-12 * s.context.mc2) {
        throw std::domain_error("pseudospin_pair: E = mc2 + C_ps makes the coupling "
                                "operator singular");
    }
    return den;
}

} // namespace

SpinorSolution make_solution(const BoundState& state, const PotentialParams& params,
                             const PhysicalContext& context,
                             const pekeris::PekerisCoeffs& coeffs) {
    if (state.branch != context.symmetry) {
        throw std::invalid_argument("make_solution: state branch does not match the context");
    }
    SpinorSolution s{state, params, context, coeffs, 0.0};
    check_state(s);
    s.quad_norm = detail::bound_norm_quadrature(state.qn.n, state.epsilon, state.decay_left,
                                                params.alpha);
    if (s.state.norm == 0.0) {
        s.state.norm = detail::bound_norm_closed(state.qn.n, state.epsilon, state.decay_left,
                                                 params.alpha);
    }
    return s;
}

double upper_spinor_f(double r, const SpinorSolution& s) {
    if (s.state.branch != Symmetry::Spin) {
        throw std::invalid_argument("upper_spinor_f: spin-branch solutions only");
    }
    return s.quad_norm * detail::bound_shape(r, s.state.qn.n, s.state.epsilon,
                                             s.state.decay_left, s.params.alpha);
}

double upper_spinor_f_series(double r, const SpinorSolution& s) {
    if (s.state.branch != Symmetry::Spin) {
        throw std::invalid_argument("upper_spinor_f_series: spin-branch solutions only");
    }
    const int n = s.state.qn.n;
    const double eps = s.state.epsilon;
    const double epsl = s.state.decay_left;
    const double a = s.params.alpha;
    const double sv = detail::sigmoid_variable(r, a);
    const double oms = 1.0 / (1.0 + std::exp(-2.0 * a * r));
    double nfact = 1.0;
    for (int k = 2; k <= n; ++k) {
        nfact *= k;
    }
    const double scale = specfun::pochhammer(2.0 * eps + 1.0, n) / nfact;
    const double f = specfun::hyp2f1(-static_cast<double>(n), n + 2.0 * (eps + epsl) + 1.0,
                                     2.0 * eps + 1.0, sv);
    return s.quad_norm * std::pow(sv, eps) * std::pow(oms, epsl) * scale * f;
}

double lower_spinor_g_from_f(double r, const SpinorSolution& s) {
    if (s.state.branch != Symmetry::Spin) {
        throw std::invalid_argument("lower_spinor_g_from_f: spin-branch solutions only");
    }
    if (!(r > 0.0)) {
        throw std::invalid_argument("lower_spinor_g_from_f: r must be positive");
    }
    const double den = denominator_spin(s);
    const int n = s.state.qn.n;
    const double f = detail::bound_shape(r, n, s.state.epsilon, s.state.decay_left,
                                         s.params.alpha);
    const double df = detail::bound_shape_derivative(r, n, s.state.epsilon, s.state.decay_left,
                                                     s.params.alpha);
    return s.quad_norm * (df + s.state.qn.kappa * f / r) / den;
}

SpinorPair pseudospin_pair(double r, const SpinorSolution& s) {
    if (s.state.branch != Symmetry::Pseudospin) {
        throw std::invalid_argument("pseudospin_pair: pseudospin-branch solutions only");
    }
    if (!(r > 0.0)) {
        throw std::invalid_argument("pseudospin_pair: r must be positive");
    }
    const double den = denominator_pseudo(s);
    const int n = s.state.qn.n;
    const double g = detail::bound_shape(r, n, s.state.epsilon, s.state.decay_left,
                                         s.params.alpha);
    const double dg = detail::bound_shape_derivative(r, n, s.state.epsilon, s.state.decay_left,
                                                     s.params.alpha);
    SpinorPair out;
    out.g = s.quad_norm * g;
    out.f = s.quad_norm * (dg - s.state.qn.kappa * g / r) / den;
    return out;
}

double normalization_closed_form(const SpinorSolution& s) {
    check_state(s);
    return detail::bound_norm_closed(s.state.qn.n, s.state.epsilon, s.state.decay_left,
                                     s.params.alpha);
}

double normalization_quadrature(const SpinorSolution& s) {
    check_state(s);
    return detail::bound_norm_quadrature(s.state.qn.n, s.state.epsilon, s.state.decay_left,
                                         s.params.alpha);
}

std::vector<double> ode_residual(const SpinorSolution& s, std::span<const double> r_grid) {
    check_state(s);
    const double a = s.params.alpha;
    const double h = 1e-3 / a; // differentiation step; balances truncation and roundoff
    const auto& ctx = s.context;
    const double h2c2 = ctx.hbarc * ctx.hbarc;
    const bool spin = s.state.branch == Symmetry::Spin;
    const double E = s.state.energy;
    const double omega = spin ? static_cast<double>(s.state.qn.kappa) * (s.state.qn.kappa + 1)
                              : static_cast<double>(s.state.qn.kappa) * (s.state.qn.kappa - 1);
    const double gamma = spin ? (ctx.mc2 + E - ctx.sym_const) / h2c2
                              : (ctx.mc2 - E + ctx.sym_const) / h2c2;
    const double target = spin
                              ? (E * E - ctx.mc2 * ctx.mc2 + ctx.sym_const * (ctx.mc2 - E)) / h2c2
                              : (E * E - ctx.mc2 * ctx.mc2 - ctx.sym_const * (ctx.mc2 + E)) / h2c2;

    const auto shape = [&](double r) {
        return detail::bound_shape(r, s.state.qn.n, s.state.epsilon, s.state.decay_left, a);
    };
    const auto u_eff = [&](double r) {
        const double c = std::cosh(a * r);
        const double vwell = -s.params.v1 / (c * c) + s.params.v2 * std::tanh(a * r);
        const double cent =
            (omega == 0.0)
                ? 0.0
                : omega * pekeris::centrifugal_approx(r, a, s.params.r_e, s.coeffs);
        return cent + (spin ? gamma * vwell : -gamma * vwell);
    };

    double fmax = 0.0;
    for (double r : r_grid) {
        fmax = std::max(fmax, std::fabs(shape(r)));
    }
    std::vector<double> out(r_grid.size(), 0.0);
    if (fmax == 0.0) {
        return out;
    }
    for (std::size_t i = 0; i < r_grid.size(); ++i) {
        const double r = r_grid[i];
        const double f0 = shape(r);
        const double fpp = (-shape(r + 2.0 * h) + 16.0 * shape(r + h) - 30.0 * f0 +
                            16.0 * shape(r - h) - shape(r - 2.0 * h)) /
                           (12.0 * h * h);
        out[i] = (-fpp + u_eff(r) * f0 - target * f0) / fmax;
    }
    return out;
}

double nonrel_wavefunction(double r, int n, int l, const PotentialParams& p, double mu,
                           const pekeris::PekerisCoeffs& coeffs, double hbar) {
    const double E = spectra::nonrelativistic_energy(n, l, p, mu, coeffs, hbar);
    const double a2 = p.alpha * p.alpha;
    const double re2 = p.r_e * p.r_e;
    const double h2 = hbar * hbar;
    const double omega = static_cast<double>(l) * (l + 1);
    const double eps_sq = (omega * coeffs.d0 / re2 + 2.0 * mu / h2 * (p.v2 - E)) / (4.0 * a2);
    if (!(eps_sq > 0.0)) {
        throw std::domain_error("nonrel_wavefunction: non-positive decay exponent");
    }
    const double epsl_sq =
        (omega * (coeffs.d0 - coeffs.d1 + coeffs.d2) / re2 - 2.0 * mu / h2 * (p.v2 + E)) /
        (4.0 * a2);
    if (!(epsl_sq > 0.0)) {
        throw std::domain_error("nonrel_wavefunction: non-positive left decay exponent");
    }
    const double eps = std::sqrt(eps_sq);
    const double epsl = std::sqrt(epsl_sq);
    const double norm = detail::bound_norm_quadrature(n, eps, epsl, p.alpha);
    return norm * detail::bound_shape(r, n, eps, epsl, p.alpha);
}

} // namespace rmdirac::wavefun
