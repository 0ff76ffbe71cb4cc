#include "rmdirac/pekeris.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace rmdirac::pekeris {

namespace {

void check_args(double alpha, double r_e) {
    if (!(alpha > 0.0) || !(r_e > 0.0)) {
        throw std::invalid_argument("pekeris: alpha and r_e must be positive");
    }
}

} // namespace

double approximant_u(double r, double alpha) {
    const double x = std::exp(-2.0 * alpha * r);
    if (std::isinf(x)) {
        return -1.0; // r -> -inf limit
    }
    return -x / (1.0 + x);
}

PekerisCoeffs published_coeffs(double alpha, double r_e) {
    check_args(alpha, r_e);
    const double t = alpha * r_e;
    // log(e^{2t} + 1) without forming e^{2t}
    const double log_ep1 = 2.0 * t + std::log1p(std::exp(-2.0 * t));
    const double xe = std::exp(-2.0 * t);
    const double X = (1.0 + xe) / (2.0 * t);

    PekerisCoeffs c;
    c.source = CoeffSource::PublishedFormula;
    c.d0 = 1.0 - X * X * (8.0 * t / (1.0 + xe) - (3.0 + 2.0 * t));
    // printed bracket: [3 X - (3 + 2t) X] = -2t X
    c.d1 = -2.0 * std::exp(log_ep1) * (3.0 * X - (3.0 + 2.0 * t) * X);
    c.d2 = std::exp(2.0 * log_ep1 + 2.0 * std::log(X)) * (3.0 + 2.0 * t - 4.0 * t / (1.0 + xe));
    return c;
}

PekerisCoeffs matched_coeffs(double alpha, double r_e) {
    check_args(alpha, r_e);
    const double t = alpha * r_e;
    const double xe = std::exp(-2.0 * t);
    const double ue = -xe / (1.0 + xe);
    const double up = 2.0 * alpha * xe / ((1.0 + xe) * (1.0 + xe));
    const double upp = -4.0 * alpha * alpha * xe * (1.0 - xe) / std::pow(1.0 + xe, 3);
    // u'(r_e) = 2 alpha x/(1+x)^2 > 0 for finite alpha r_e, so the system
    // is never singular; assert per contract.
    assert(up > 0.0);
    if (!(up > 0.0)) {
        throw std::runtime_error("matched_coeffs: singular contact system (u'(r_e) = 0)");
    }

    // Contact data for G(u) = d0 + d1 u + d2 u^2 with (1/r_e^2) G(u(r)) ~ 1/r^2:
    //   G(ue) = 1,  G'(ue) u' = -2/r_e,  G''(ue) u'^2 + G'(ue) u'' = 6/r_e^2
    const double Gp = -2.0 / (r_e * up);
    const double Gpp = (6.0 / (r_e * r_e) - Gp * upp) / (up * up);

    PekerisCoeffs c;
    c.source = CoeffSource::ContactMatched;
    c.d2 = 0.5 * Gpp;
    c.d1 = Gp - 2.0 * c.d2 * ue;
    c.d0 = 1.0 - c.d1 * ue - c.d2 * ue * ue;
    return c;
}

double centrifugal_approx(double r, double alpha, double r_e, const PekerisCoeffs& c) {
    if (!(r_e > 0.0)) {
        throw std::invalid_argument("centrifugal_approx: r_e must be positive");
    }
    const double u = approximant_u(r, alpha);
    return (c.d0 + c.d1 * u + c.d2 * u * u) / (r_e * r_e);
}

ContactResiduals contact_residuals(double alpha, double r_e, const PekerisCoeffs& c) {
    check_args(alpha, r_e);
    const double xe = std::exp(-2.0 * alpha * r_e);
    const double ue = -xe / (1.0 + xe);
    const double up = 2.0 * alpha * xe / ((1.0 + xe) * (1.0 + xe));
    const double upp = -4.0 * alpha * alpha * xe * (1.0 - xe) / std::pow(1.0 + xe, 3);

    const double re2 = r_e * r_e;
    const double val = (c.d0 + c.d1 * ue + c.d2 * ue * ue) / re2;
    const double first = (c.d1 + 2.0 * c.d2 * ue) * up / re2;
    const double second = (2.0 * c.d2 * up * up + (c.d1 + 2.0 * c.d2 * ue) * upp) / re2;

    ContactResiduals out;
    out.value = (val - 1.0 / re2) * re2;
    out.first = (first + 2.0 / (re2 * r_e)) * re2 * r_e;
    out.second = (second - 6.0 / (re2 * re2)) * re2 * re2;
    return out;
}

} // namespace rmdirac::pekeris
