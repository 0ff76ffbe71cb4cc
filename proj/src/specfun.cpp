#include "rmdirac/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace rmdirac::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSeriesEps = 1e-16;
constexpr long kSeriesCap = 1000000;

bool is_nonpositive_integer(double v, int& m) {
    if (v > 1e-12) {
        return false;
    }
    const double r = std::round(v);
    if (std::fabs(v - r) < 1e-12 * std::max(1.0, std::fabs(v)) + 1e-300) {
        m = static_cast<int>(-r);
        return m >= 0;
    }
    return false;
}

// Lanczos, g = 7, 9 coefficients.
double lanczos_ln_gamma(double x) {
    static const double c[9] = {
        0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
        771.32342877765313,     -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5) {
        // reflection keeps full accuracy near the left edge of the domain
        return std::log(kPi / std::sin(kPi * x)) - lanczos_ln_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double a = c[0];
    for (int i = 1; i < 9; ++i) {
        a += c[i] / (z + i);
    }
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

} // namespace

double ln_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("ln_gamma: argument must be positive, got " + std::to_string(x));
    }
    return lanczos_ln_gamma(x);
}

double pochhammer(double x, int m) {
    if (m < 0) {
        throw std::invalid_argument("pochhammer: order must be non-negative");
    }
    double p = 1.0;
    for (int i = 0; i < m; ++i) {
        p *= x + i;
    }
    return p;
}

double jacobi_p(int n, double a, double b, double x) {
    if (n < 0) {
        throw std::invalid_argument("jacobi_p: degree must be non-negative");
    }
    if (!(a > -1.0) || !(b > -1.0)) {
        throw std::domain_error("jacobi_p: parameters must exceed -1");
    }
    if (n == 0) {
        return 1.0;
    }
    double p0 = 1.0;
    double p1 = 0.5 * (a - b + (a + b + 2.0) * x);
    for (int k = 2; k <= n; ++k) {
        const double c1 = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0);
        const double c2 = (2.0 * k + a + b - 1.0) * (a * a - b * b);
        const double c3 = (2.0 * k + a + b - 2.0) * (2.0 * k + a + b - 1.0) * (2.0 * k + a + b);
        const double c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b);
        const double p2 = ((c2 + c3 * x) * p1 - c4 * p0) / c1;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double jacobi_p_derivative(int n, double a, double b, double x) {
    if (n == 0) {
        return 0.0;
    }
    return 0.5 * (n + a + b + 1.0) * jacobi_p(n - 1, a + 1.0, b + 1.0, x);
}

double laguerre_l(int n, double a, double x) {
    if (n < 0) {
        throw std::invalid_argument("laguerre_l: degree must be non-negative");
    }
    if (n == 0) {
        return 1.0;
    }
    double l0 = 1.0;
    double l1 = 1.0 + a - x;
    for (int k = 1; k < n; ++k) {
        const double l2 = ((2.0 * k + 1.0 + a - x) * l1 - (k + a) * l0) / (k + 1.0);
        l0 = l1;
        l1 = l2;
    }
    return l1;
}

double hyp2f1(double a, double b, double c, double z) {
    if (z == 0.0) {
        return 1.0;
    }
    int ma = 0;
    int mb = 0;
    const bool term_a = is_nonpositive_integer(a, ma);
    const bool term_b = is_nonpositive_integer(b, mb);
    long nterms = -1; // index of the last non-zero term
    if (term_a && term_b) {
        nterms = std::min(ma, mb);
    } else if (term_a) {
        nterms = ma;
    } else if (term_b) {
        nterms = mb;
    }

    int mc = 0;
    const bool c_pole = is_nonpositive_integer(c, mc);
    if (nterms < 0) {
        if (std::fabs(z) >= 1.0) {
            throw std::domain_error("hyp2f1: non-terminating series requires |z| < 1");
        }
        if (c_pole) {
            throw std::domain_error("hyp2f1: c is a non-positive integer");
        }
    } else if (c_pole && mc < nterms) {
        throw std::domain_error("hyp2f1: c pole hit before the series terminates");
    }

    double sum = 1.0;
    double term = 1.0;
    for (long k = 0;; ++k) {
        if (nterms >= 0 && k >= nterms) {
            break;
        }
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if (nterms < 0 && std::fabs(term) <= kSeriesEps * std::fabs(sum)) {
            break;
        }
        if (k >= kSeriesCap) {
            throw std::runtime_error("hyp2f1: series cap of 1e6 terms reached");
        }
    }
    return sum;
}

double hyp3f2_unit(double a1, double a2, double a3, double b1, double b2) {
    int m = 0;
    long nterms = -1;
    for (double av : {a1, a2, a3}) {
        if (is_nonpositive_integer(av, m)) {
            nterms = (nterms < 0) ? m : std::min<long>(nterms, m);
        }
    }
    if (nterms < 0) {
        throw std::domain_error("hyp3f2_unit: series does not terminate "
                                "(no numerator parameter is a non-positive integer)");
    }
    int mb = 0;
    for (double bv : {b1, b2}) {
        if (is_nonpositive_integer(bv, mb) && mb < nterms) {
            throw std::domain_error("hyp3f2_unit: denominator parameter pole inside the sum");
        }
    }
    double sum = 1.0;
    double term = 1.0;
    for (long p = 0; p < nterms; ++p) {
        term *= (a1 + p) * (a2 + p) * (a3 + p) / ((b1 + p) * (b2 + p) * (p + 1.0));
        sum += term;
    }
    return sum;
}

QuadratureRule gauss_legendre(int npts) {
    if (npts < 2 || npts > 512) {
        throw std::invalid_argument("gauss_legendre: npts must be in [2, 512]");
    }
    QuadratureRule rule;
    rule.nodes.assign(npts, 0.0);
    rule.weights.assign(npts, 0.0);
    const int half = (npts + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton from the Chebyshev-like initial guess
        double x = std::cos(kPi * (i + 0.75) / (npts + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= npts; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = npts * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) {
                break;
            }
        }
        rule.nodes[i] = -x;
        rule.nodes[npts - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[npts - 1 - i] = w;
    }
    if (npts % 2 == 1) {
        rule.nodes[npts / 2] = 0.0;
    }
    return rule;
}

} // namespace rmdirac::specfun
