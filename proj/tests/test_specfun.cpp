#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rmdirac/specfun.hpp"

using namespace rmdirac::specfun;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("ln_gamma hits the classic values") {
    CHECK(std::fabs(ln_gamma(1.0)) < 1e-15);
    CHECK(ln_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
    CHECK(ln_gamma(0.5) == doctest::Approx(0.5 * std::log(kPi)).epsilon(1e-14));
    CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(ln_gamma(-2.5), std::domain_error);
}

TEST_CASE("ln_gamma recurrence accuracy") {
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> u(0.1, 20.0);
    for (int i = 0; i < 200; ++i) {
        const double x = u(rng);
        const double lhs = ln_gamma(x + 1.0);
        const double rhs = ln_gamma(x) + std::log(x);
        CHECK(std::fabs(lhs - rhs) < 1e-13 * std::max(1.0, std::fabs(rhs)));
    }
}

TEST_CASE("pochhammer basics and gamma consistency") {
    CHECK(pochhammer(4.7, 0) == 1.0);
    CHECK(pochhammer(0.0, 3) == 0.0);
    CHECK(pochhammer(3.0, 2) == 12.0);
    CHECK(pochhammer(-2.0, 4) == 0.0); // crosses zero
    CHECK(pochhammer(-2.5, 3) == doctest::Approx(-2.5 * -1.5 * -0.5));
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> u(0.2, 8.0);
    for (int i = 0; i < 100; ++i) {
        const double x = u(rng);
        const int m = static_cast<int>(rng() % 8);
        const double via_gamma = std::exp(ln_gamma(x + m) - ln_gamma(x));
        CHECK(pochhammer(x, m) == doctest::Approx(via_gamma).epsilon(1e-12));
    }
}

TEST_CASE("jacobi polynomial low orders and symmetry") {
    CHECK(jacobi_p(0, 0.3, 4.5, -0.7) == 1.0);
    CHECK(jacobi_p(1, 2.0, 3.0, 0.5) == doctest::Approx(1.25).epsilon(1e-15));
    CHECK_THROWS_AS(jacobi_p(2, -1.5, 0.0, 0.5), std::domain_error);

    std::mt19937 rng(3);
    std::uniform_real_distribution<double> par(-0.9, 4.0), arg(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const int n = static_cast<int>(rng() % 11);
        const double a = par(rng), b = par(rng), x = arg(rng);
        const double lhs = jacobi_p(n, a, b, -x);
        const double rhs = ((n % 2) ? -1.0 : 1.0) * jacobi_p(n, b, a, x);
        CHECK(std::fabs(lhs - rhs) < 1e-12 * std::max(1.0, std::fabs(rhs)));
    }
}

TEST_CASE("jacobi derivative identity vs differences") {
    const double h = 1e-6;
    for (int n : {1, 2, 5}) {
        const double d = jacobi_p_derivative(n, 1.2, 0.7, 0.3);
        const double fd = (jacobi_p(n, 1.2, 0.7, 0.3 + h) - jacobi_p(n, 1.2, 0.7, 0.3 - h)) /
                          (2.0 * h);
        CHECK(d == doctest::Approx(fd).epsilon(1e-8));
    }
}

TEST_CASE("hyp2f1 terminating and classic identities") {
    CHECK(hyp2f1(0.7, -3.1, 2.2, 0.0) == 1.0);
    CHECK(hyp2f1(-1.0, 2.0, 3.0, 0.5) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(hyp2f1(1.0, 1.0, 2.0, 0.5) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-13));
    // (1-z)^{-a} when b = c
    CHECK(hyp2f1(0.8, 2.5, 2.5, 0.3) == doctest::Approx(std::pow(0.7, -0.8)).epsilon(1e-13));
    // terminating series works outside the unit disk
    CHECK(hyp2f1(-2.0, 1.5, 2.0, 3.0) ==
          doctest::Approx(1.0 - 2.0 * 1.5 / 2.0 * 3.0 +
                          (2.0 * 1.0 / 2.0) * (1.5 * 2.5) / (2.0 * 3.0) * 9.0));
    CHECK_THROWS_AS(hyp2f1(0.5, 0.7, 1.1, 1.2), std::domain_error);
    CHECK_THROWS_AS(hyp2f1(0.5, 0.7, -2.0, 0.3), std::domain_error);
}

TEST_CASE("hyp2f1 derivative relation") {
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> par(0.3, 2.5), arg(-0.5, 0.5);
    const double h = 1e-5;
    for (int i = 0; i < 50; ++i) {
        const double a = par(rng), b = par(rng), c = par(rng) + 1.0, z = arg(rng);
        const double fd = (hyp2f1(a, b, c, z + h) - hyp2f1(a, b, c, z - h)) / (2.0 * h);
        const double cf = a * b / c * hyp2f1(a + 1.0, b + 1.0, c + 1.0, z);
        CHECK(std::fabs(fd - cf) < 1e-7 * std::max(1.0, std::fabs(cf)));
    }
}

TEST_CASE("hyp3f2_unit terminating sums") {
    CHECK(hyp3f2_unit(1.3, 0.0, 2.4, 3.3, 4.1) == 1.0);
    CHECK(hyp3f2_unit(2.0, -1.0, 3.0, 4.0, 5.0) == doctest::Approx(0.7).epsilon(1e-15));
    CHECK_THROWS_AS(hyp3f2_unit(0.5, 0.7, 0.9, 1.1, 1.3), std::domain_error);
}

TEST_CASE("hyp3f2_unit vs extended-precision re-summation") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> par(0.3, 4.0);
    for (int i = 0; i < 60; ++i) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const double a1 = par(rng), a3 = par(rng), b1 = par(rng) + 4.0, b2 = par(rng) + 1.0;
        long double sum = 1.0L, term = 1.0L;
        for (int p = 0; p < n; ++p) {
            term *= (static_cast<long double>(a1) + p) * (static_cast<long double>(-n) + p) *
                    (static_cast<long double>(a3) + p) /
                    ((static_cast<long double>(b1) + p) * (static_cast<long double>(b2) + p) *
                     (p + 1.0L));
            sum += term;
        }
        const double lhs = hyp3f2_unit(a1, -n, a3, b1, b2);
        CHECK(std::fabs(lhs - static_cast<double>(sum)) <
              1e-12 * std::max(1.0, std::fabs(static_cast<double>(sum))));
    }
}

TEST_CASE("gauss_legendre rules") {
    CHECK_THROWS_AS(gauss_legendre(1), std::invalid_argument);
    CHECK_THROWS_AS(gauss_legendre(513), std::invalid_argument);

    const auto r2 = gauss_legendre(2);
    double q = 0.0;
    for (std::size_t i = 0; i < r2.nodes.size(); ++i) {
        q += r2.weights[i] * r2.nodes[i] * r2.nodes[i];
    }
    CHECK(q == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    for (int npts : {2, 8, 16, 64, 128, 512}) {
        const auto r = gauss_legendre(npts);
        double wsum = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            wsum += r.weights[i];
            CHECK(r.weights[i] > 0.0);
            if (i > 0) {
                CHECK(r.nodes[i] > r.nodes[i - 1]);
            }
            CHECK(r.nodes[i] ==
                  doctest::Approx(-r.nodes[r.nodes.size() - 1 - i]).epsilon(1e-13));
        }
        CHECK(std::fabs(wsum - 2.0) < 1e-13);
    }

    const auto r16 = gauss_legendre(16);
    double m = 0.0;
    for (std::size_t i = 0; i < r16.nodes.size(); ++i) {
        const double x = 0.5 + 0.5 * r16.nodes[i];
        m += 0.5 * r16.weights[i] * x * x;
    }
    CHECK(std::fabs(m - 1.0 / 3.0) < 1e-14);

    // degree 2 npts - 1 exactness (odd part integrates to zero)
    const auto r5 = gauss_legendre(5);
    double p9 = 0.0;
    for (std::size_t i = 0; i < r5.nodes.size(); ++i) {
        p9 += r5.weights[i] * (std::pow(r5.nodes[i], 9) + std::pow(r5.nodes[i], 8));
    }
    CHECK(p9 == doctest::Approx(2.0 / 9.0).epsilon(1e-13));

    // refinement self-consistency on a decaying integrand mapped to [0, 40]
    const auto decay = [](double r) {
        const double f = std::exp(-0.7 * r) * r * r;
        return f * f;
    };
    double v64 = 0.0, v128 = 0.0;
    for (int npts : {64, 128}) {
        const auto rule = gauss_legendre(npts);
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            acc += 20.0 * rule.weights[i] * decay(20.0 + 20.0 * rule.nodes[i]);
        }
        (npts == 64 ? v64 : v128) = acc;
    }
    CHECK(std::fabs(v64 - v128) < 1e-10 * std::fabs(v128));
}

TEST_CASE("laguerre polynomial values") {
    CHECK(laguerre_l(0, 1.3, 2.0) == 1.0);
    CHECK(laguerre_l(1, 2.0, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(laguerre_l(2, 0.0, 1.0) == doctest::Approx(1.0 - 2.0 + 0.5).epsilon(1e-14));
}
