#include "rmdirac/detail/radial.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rmdirac/specfun.hpp"

namespace rmdirac::detail {

double bound_shape(double r, int n, double eps, double eps_left, double alpha) {
    // s and 1-s evaluated separately so neither suffers cancellation
    const double s = 1.0 / (1.0 + std::exp(2.0 * alpha * r));
    const double oms = 1.0 / (1.0 + std::exp(-2.0 * alpha * r));
    const double y = std::tanh(alpha * r); // 1 - 2s
    const double pref = std::pow(s, eps) * std::pow(oms, eps_left);
    if (pref == 0.0) {
        return 0.0;
    }
    return pref * specfun::jacobi_p(n, 2.0 * eps, 2.0 * eps_left, y);
}

double bound_shape_derivative(double r, int n, double eps, double eps_left, double alpha) {
    const double s = 1.0 / (1.0 + std::exp(2.0 * alpha * r));
    const double oms = 1.0 / (1.0 + std::exp(-2.0 * alpha * r));
    const double y = std::tanh(alpha * r);
    const double pref = std::pow(s, eps) * std::pow(oms, eps_left);
    if (pref == 0.0) {
        return 0.0;
    }
    const double pj = specfun::jacobi_p(n, 2.0 * eps, 2.0 * eps_left, y);
    const double dpj = specfun::jacobi_p_derivative(n, 2.0 * eps, 2.0 * eps_left, y);
    // ds/dr = -2 alpha s (1-s); dy/dr = +2 alpha s(1-s) * 2
    return -2.0 * alpha * pref * ((eps * oms - eps_left * s) * pj - 2.0 * s * oms * dpj);
}

double bound_norm_closed(int n, double eps, double eps_left, double alpha) {
    if (!(eps > 0.0) || !(eps_left > 0.0)) {
        throw std::domain_error("bound_norm_closed: decay exponents must be positive");
    }
    using specfun::hyp3f2_unit;
    using specfun::ln_gamma;
    using specfun::pochhammer;

    const double b = n + 2.0 * (eps + eps_left) + 1.0;
    const double c = 2.0 * eps + 1.0;
    double sum = 0.0;
    double mfact = 1.0;
    for (int m = 0; m <= n; ++m) {
        if (m > 0) {
            mfact *= m;
        }
        const double coeff = pochhammer(-n, m) * pochhammer(b, m) / (pochhammer(c, m) * mfact);
        const double beta = std::exp(ln_gamma(2.0 * eps_left) + ln_gamma(2.0 * eps + m) -
                                     ln_gamma(2.0 * (eps + eps_left) + m));
        const double f = hyp3f2_unit(2.0 * eps + m, -static_cast<double>(n), b,
                                     2.0 * (eps + eps_left) + m, c);
        sum += coeff * beta * f;
    }
    double nfact = 1.0;
    for (int k = 2; k <= n; ++k) {
        nfact *= k;
    }
    const double jacobi_scale = pochhammer(c, n) / nfact;
    const double bracket = jacobi_scale * jacobi_scale * sum / (2.0 * alpha);
    if (!(bracket > 0.0)) {
        throw std::domain_error("bound_norm_closed: non-positive norm integral, value " +
                                std::to_string(bracket));
    }
    return 1.0 / std::sqrt(bracket);
}

namespace {

double integrate_shape_sq(int n, double eps, double eps_left, double alpha, double r_lo,
                          double r_hi, int npts, int panels) {
    const auto rule = specfun::gauss_legendre(npts);
    double total = 0.0;
    const double w = (r_hi - r_lo) / panels;
    for (int p = 0; p < panels; ++p) {
        const double a = r_lo + p * w;
        const double mid = a + 0.5 * w;
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double r = mid + 0.5 * w * rule.nodes[i];
            const double f = bound_shape(r, n, eps, eps_left, alpha);
            acc += rule.weights[i] * f * f;
        }
        total += 0.5 * w * acc;
    }
    return total;
}

} // namespace

double bound_norm_quadrature(int n, double eps, double eps_left, double alpha, double rel_tol) {
    if (!(eps > 0.0) || !(eps_left > 0.0)) {
        throw std::domain_error("bound_norm_quadrature: decay exponents must be positive");
    }
    // peak of the n=0 envelope; nodes of higher n stay within a few widths
    const double r_peak = 0.5 / alpha * std::log(eps_left / eps);
    const double r_hi = r_peak + (40.0 + 6.0 * n) / (4.0 * alpha * eps) + 2.0 / alpha;
    const double r_lo = r_peak - (40.0 + 6.0 * n) / (4.0 * alpha * eps_left) - 2.0 / alpha;
    const int panels = 16;
    const double coarse = integrate_shape_sq(n, eps, eps_left, alpha, r_lo, r_hi, 64, panels);
    const double fine = integrate_shape_sq(n, eps, eps_left, alpha, r_lo, r_hi, 128, panels);
    if (!(fine > 0.0)) {
        throw std::runtime_error("bound_norm_quadrature: vanishing norm integral");
    }
    if (std::fabs(fine - coarse) > rel_tol * std::fabs(fine)) {
        throw std::runtime_error("bound_norm_quadrature: refinement did not converge, "
                                 "relative change " +
                                 std::to_string(std::fabs(fine - coarse) / std::fabs(fine)));
    }
    return 1.0 / std::sqrt(fine);
}

} // namespace rmdirac::detail
