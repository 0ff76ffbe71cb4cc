#pragma once

namespace rmdirac::pekeris {

enum class CoeffSource { PublishedFormula, ContactMatched };

/// Coefficients of the centrifugal approximant
///   1/r^2 ~ (1/r_e^2) [ d0 + d1 u(r) + d2 u(r)^2 ],
/// with u(r) = -exp(-2 alpha r) / (1 + exp(-2 alpha r)).
struct PekerisCoeffs {
    double d0 = 1.0;
    double d1 = 0.0;
    double d2 = 0.0;
    CoeffSource source = CoeffSource::ContactMatched;
};

/// Literal evaluation of the published coefficient expressions. The d1
/// bracket collapses to a single term as printed; matched_coeffs is the
/// trusted variant and the default downstream. exp(2 alpha r_e) factors are
/// assembled in log space so large alpha r_e cannot overflow intermediates.
PekerisCoeffs published_coeffs(double alpha, double r_e);

/// Coefficients from the three contact conditions at r = r_e: the
/// approximant matches 1/r^2 in value, first and second derivative. The
/// 3x3 system is triangular in (d2, d1, d0) and is solved exactly.
PekerisCoeffs matched_coeffs(double alpha, double r_e);

/// u(r) = -exp(-2 alpha r)/(1 + exp(-2 alpha r)), the approximant variable.
double approximant_u(double r, double alpha);

/// (1/r_e^2)[d0 + d1 u + d2 u^2] at radius r.
double centrifugal_approx(double r, double alpha, double r_e, const PekerisCoeffs& c);

/// Residuals of the three contact conditions, scaled by r_e^2, r_e^3 and
/// r_e^4 respectively so each entry is dimensionless.
struct ContactResiduals {
    double value = 0.0;
    double first = 0.0;
    double second = 0.0;
};

ContactResiduals contact_residuals(double alpha, double r_e, const PekerisCoeffs& c);

} // namespace rmdirac::pekeris
