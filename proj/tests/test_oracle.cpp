#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rmdirac/oracle.hpp"
#include "rmdirac/pekeris.hpp"

using namespace rmdirac;
using namespace rmdirac::oracle;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("box spectrum") {
    GridSpec g{0.0, 1.0, 4000};
    const auto lam = eigenvalues_fd([](double) { return 0.0; }, g, 4);
    for (int k = 1; k <= 4; ++k) {
        const double exact = kPi * kPi * k * k;
        CHECK(std::fabs(lam[k - 1] - exact) / exact < 1e-4);
    }
    CHECK(lam[0] < lam[1]);
    CHECK(lam[1] < lam[2]);
}

TEST_CASE("half-line oscillator spectrum") {
    GridSpec g{0.0, 20.0, 4000};
    const auto lam = eigenvalues_fd([](double r) { return r * r; }, g, 3);
    const double exact[] = {3.0, 7.0, 11.0};
    for (int k = 0; k < 3; ++k) {
        CHECK(std::fabs(lam[k] - exact[k]) / exact[k] < 1e-4);
    }
}

TEST_CASE("second-order convergence") {
    const auto zero = [](double) { return 0.0; };
    const double exact = kPi * kPi;
    const double e1 = eigenvalues_fd(zero, {0.0, 1.0, 1000}, 1)[0] - exact;
    const double e2 = eigenvalues_fd(zero, {0.0, 1.0, 2000}, 1)[0] - exact;
    const double order = std::log(std::fabs(e1 / e2)) / std::log(1999.0 / 999.0);
    CHECK(order == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("grid and count validation") {
    GridSpec g{0.0, 1.0, 400};
    CHECK_THROWS_AS(eigenvalues_fd([](double) { return 0.0; }, g, 399),
                    std::invalid_argument);
    CHECK_THROWS_AS((GridSpec{1.0, 0.5, 400}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((GridSpec{0.0, 1.0, 100}.validate()), std::invalid_argument);
    // negative r_min selects the extended problem and is legal
    GridSpec ext{-5.0, 5.0, 400};
    ext.validate();
}

TEST_CASE("effective problem") {
    PotentialParams p{3.0, 1.0, 0.5, 1.0};
    PhysicalContext ctx{5.0, 1.0, Symmetry::Spin, 0.0};
    const auto coeffs = pekeris::matched_coeffs(0.5, 1.0);

    // omega = 0: exact and approximated centrifugal terms coincide bitwise
    {
        QuantumNumbers qn{0, -1};
        const auto a = effective_problem(1.0, p, ctx, qn, CentrifugalMode::Exact, coeffs);
        const auto b = effective_problem(1.0, p, ctx, qn, CentrifugalMode::Pekeris, coeffs);
        for (double r : {0.1, 0.7, 3.0, 12.0}) {
            CHECK(a.u_eff(r) == b.u_eff(r));
        }
    }

    // spectral target vanishes at E = mc2 under exact spin symmetry
    {
        QuantumNumbers qn{0, -1};
        const auto prob = effective_problem(5.0, p, ctx, qn, CentrifugalMode::Exact, coeffs);
        CHECK(prob.target == doctest::Approx(0.0));
    }

    // far tail approaches gamma v2
    {
        QuantumNumbers qn{0, -1};
        const double E = 2.0;
        const auto prob = effective_problem(E, p, ctx, qn, CentrifugalMode::Exact, coeffs);
        CHECK(prob.u_eff(400.0) == doctest::Approx((ctx.mc2 + E) * p.v2).epsilon(1e-10));
    }
}

TEST_CASE("self-consistent solve finds the s-wave level") {
    PotentialParams p{3.0, 1.0, 0.5, 1.0};
    PhysicalContext ctx{5.0, 1.0, Symmetry::Spin, 0.0};
    QuantumNumbers qn{0, -1};
    const auto coeffs = pekeris::matched_coeffs(0.5, 1.0);
    OracleOptions opt;
    opt.domain = Domain::ExtendedLine;
    opt.base_points = 2000;
    opt.target_energy = 2.21;
    opt.e_min = 1.9;
    opt.e_max = 2.5;
    const auto res = self_consistent_energy(0, p, ctx, qn, CentrifugalMode::Exact, coeffs,
                                            1e-4, opt);
    REQUIRE(res.found);
    CHECK(res.converged);
    CHECK(res.energy == doctest::Approx(2.21281199588560318).epsilon(2e-6));
    CHECK(res.richardson_error < 1e-4);
    CHECK(res.eigen_index == 0);
}

TEST_CASE("no sign change reports no oracle state") {
    PotentialParams p{3.0, 1.0, 0.5, 1.0};
    PhysicalContext ctx{5.0, 1.0, Symmetry::Spin, 0.0};
    QuantumNumbers qn{0, -1};
    const auto coeffs = pekeris::matched_coeffs(0.5, 1.0);
    OracleOptions opt;
    opt.domain = Domain::ExtendedLine;
    opt.base_points = 1000;
    opt.e_min = -4.5;
    opt.e_max = -3.5;
    const auto res = self_consistent_energy(0, p, ctx, qn, CentrifugalMode::Exact, coeffs,
                                            1e-5, opt);
    CHECK(!res.found);
    CHECK(!res.converged);
}

TEST_CASE("exact centrifugal term is rejected on the extended domain") {
    PotentialParams p{3.0, 1.0, 0.5, 1.0};
    PhysicalContext ctx{5.0, 1.0, Symmetry::Spin, 0.0};
    QuantumNumbers qn{0, 2};
    const auto coeffs = pekeris::matched_coeffs(0.5, 1.0);
    OracleOptions opt;
    opt.domain = Domain::ExtendedLine;
    CHECK_THROWS_AS(self_consistent_energy(0, p, ctx, qn, CentrifugalMode::Exact, coeffs,
                                           1e-6, opt),
                    std::invalid_argument);
}

TEST_CASE("nonrelativistic oracle matches the closed form at l = 0") {
    PotentialParams p{3.0, 1.0, 0.5, 1.0};
    const pekeris::PekerisCoeffs c0;
    OracleOptions opt;
    opt.domain = Domain::ExtendedLine;
    opt.base_points = 3000;
    const auto res = self_consistent_nonrel(0, 0, p, 2.0, CentrifugalMode::Pekeris, c0, 1e-6,
                                            1.0, opt);
    REQUIRE(res.found);
    // closed form for mu = 2
    const double sbar = 0.5 * (-1.0 + std::sqrt(1.0 + 8.0 * 2.0 * 3.0 / 0.25));
    const double q = -2.0 * 1.0 / 0.25;
    const double br = q / sbar - sbar;
    const double expected = 1.0 - 0.25 / 4.0 * br * br;
    CHECK(res.energy == doctest::Approx(expected).epsilon(1e-6));
}
