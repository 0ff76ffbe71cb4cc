#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "rmdirac/nu.hpp"
#include "rmdirac/pekeris.hpp"
#include "rmdirac/spectra.hpp"

using namespace rmdirac;
using namespace rmdirac::spectra;

namespace {

EnergyResidualSpec sample_swave(int n) {
    EnergyResidualSpec s;
    s.branch = ResidualBranch::SpinGeneral;
    s.params = {3.0, 1.0, 0.5, 1.0};
    s.context = {5.0, 1.0, Symmetry::Spin, 0.0};
    s.qn = {n, -1};
    s.coeffs = pekeris::matched_coeffs(0.5, 1.0);
    return s;
}

EnergyResidualSpec sample_centrifugal(int n, int kappa) {
    EnergyResidualSpec s;
    s.branch = ResidualBranch::SpinGeneral;
    s.params = {5.0, -1.5, 0.35, 2.5};
    s.context = {8.0, 1.0, Symmetry::Spin, 0.0};
    s.qn = {n, kappa};
    s.coeffs = pekeris::matched_coeffs(0.35, 2.5);
    return s;
}

std::mt19937& rng() {
    static std::mt19937 r(314159);
    return r;
}

double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

} // namespace

TEST_CASE("s-wave sample well reproduces the frozen levels") {
    // golden values from an independent high-precision root find of the
    // quantization relation
    const double golden[] = {2.21281199588560318, 2.73794748876509202, 3.16936315077009353,
                             3.51852756757886882, 3.78633563007383489, 3.95917675954750483};
    for (int n = 0; n < 6; ++n) {
        auto s = sample_swave(n);
        const auto states = solve_bound_states(s, default_window(s.params, s.context));
        REQUIRE(states.size() == 1);
        CHECK(states.front().energy == doctest::Approx(golden[n]).epsilon(1e-9));
        CHECK(states.front().epsilon > 0.0);
        CHECK(states.front().delta > 0.0);
        CHECK(states.front().decay_left > 0.0);
        CHECK(states.front().norm > 0.0);
        // quantized combination
        CHECK(states.front().epsilon + states.front().decay_left + n ==
              doctest::Approx(states.front().delta).epsilon(1e-9));
        // the squared residual vanishes at the root
        const auto res = residual(states.front().energy, s);
        REQUIRE(res.has_value());
        CHECK(std::fabs(*res) / (s.context.mc2 * s.context.mc2) < 1e-8);
    }
    // the ladder ends at n = 5
    auto s6 = sample_swave(6);
    CHECK(solve_bound_states(s6, default_window(s6.params, s6.context)).empty());
}

TEST_CASE("centrifugal sample well reproduces the frozen levels") {
    const double golden[] = {3.57114617752198784, 3.98196379929262139, 4.35791759924449964,
                             4.70230045376165963};
    for (int n = 0; n < 4; ++n) {
        auto s = sample_centrifugal(n, 2);
        const auto states = solve_bound_states(s, default_window(s.params, s.context));
        REQUIRE(states.size() == 1);
        CHECK(states.back().energy == doctest::Approx(golden[n]).epsilon(1e-9));
    }
}

TEST_CASE("empty window yields an empty spectrum") {
    auto s = sample_swave(0);
    SearchWindow w{-4.9, -4.0, 200};
    CHECK(solve_bound_states(s, w).empty());
}

TEST_CASE("out-of-domain trial energies signal rather than returning a value") {
    // a huge symmetry constant drives the branch radical negative
    auto s = sample_swave(0);
    s.context.sym_const = 2.0 * s.context.mc2 + 3.0;
    CHECK(!spin_residual(0.5, s).has_value());
    CHECK(!quantization_gap(0.5, s).has_value());
    // and the solver treats the hole as a domain boundary, not a root
    CHECK(solve_bound_states(s, default_window(s.params, s.context)).empty());
}

TEST_CASE("window and spec validation") {
    auto s = sample_swave(0);
    SearchWindow bad{1.0, 0.0, 200};
    CHECK_THROWS_AS(solve_bound_states(s, bad), std::invalid_argument);
    SearchWindow few{0.0, 1.0, 50};
    CHECK_THROWS_AS(solve_bound_states(s, few), std::invalid_argument);
    auto mismatch = sample_swave(0);
    mismatch.branch = ResidualBranch::Pseudospin;
    CHECK_THROWS_AS(mismatch.validate(), std::invalid_argument);
    auto swave_kappa = sample_swave(0);
    swave_kappa.branch = ResidualBranch::SWaveSpin;
    swave_kappa.qn.kappa = 2;
    CHECK_THROWS_AS(swave_kappa.validate(), std::invalid_argument);
}

TEST_CASE("published placement reduces to the quoted arithmetic at v1 = 0, omega = 0") {
    // with the published n + delta + 1 placement and delta = 0 the residual
    // collapses to an explicit closed form
    EnergyResidualSpec s;
    s.branch = ResidualBranch::SpinGeneral;
    s.params = {0.0, 1.3, 0.6, 1.0};
    s.context = {4.0, 1.0, Symmetry::Spin, 0.0};
    s.qn = {1, -1};
    s.quantization = Quantization::AsPrinted;
    for (double E : {-1.0, 0.5, 2.7}) {
        const auto r = spin_residual(E, s);
        REQUIRE(r.has_value());
        const double np1 = s.qn.n + 1.0;
        const double a2h2 = s.params.alpha * s.params.alpha;
        const double bracket =
            -s.params.v2 * (s.context.mc2 + E) / (2.0 * a2h2) / np1 - np1;
        const double expected = (s.context.mc2 + E) * (s.context.mc2 - E + s.params.v2) -
                                a2h2 * bracket * bracket;
        CHECK(*r == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("pseudospin residual equals the mapped spin residual") {
    for (int i = 0; i < 60; ++i) {
        EnergyResidualSpec ps;
        ps.branch = ResidualBranch::Pseudospin;
        ps.params = {uniform(-6.0, 6.0), uniform(-2.0, 2.0), uniform(0.25, 1.0),
                     uniform(1.0, 4.0)};
        ps.context = {uniform(3.0, 10.0), 1.0, Symmetry::Pseudospin, uniform(-0.5, 0.5)};
        const int kappas[] = {1, -1, 2, -2, 3};
        ps.qn = {static_cast<int>(rng()() % 3), kappas[rng()() % 5]};
        ps.coeffs = pekeris::matched_coeffs(ps.params.alpha, ps.params.r_e);

        // the map flips kappa so the centrifugal strengths stay aligned
        const auto sp = apply_case_map(ps, CaseMap::SpinToPseudospin);
        CHECK(sp.qn.kappa == -ps.qn.kappa);

        const double E = uniform(-0.8 * ps.context.mc2, 0.8 * ps.context.mc2);
        const auto a = pseudospin_residual(E, ps);
        const auto b = spin_residual(-E, sp);
        CHECK(a.has_value() == b.has_value());
        if (a && b) {
            CHECK(*a == doctest::Approx(*b).epsilon(1e-12));
        }
    }
}

TEST_CASE("case maps") {
    auto s = sample_swave(0);
    s.context.sym_const = 0.3;

    const auto mapped = apply_case_map(s, CaseMap::SpinToPseudospin);
    CHECK(mapped.params.v1 == -s.params.v1);
    CHECK(mapped.params.v2 == -s.params.v2);
    CHECK(mapped.context.sym_const == -s.context.sym_const);
    CHECK(mapped.context.symmetry == Symmetry::Pseudospin);
    CHECK(mapped.branch == ResidualBranch::Pseudospin);

    const auto twice = apply_case_map(mapped, CaseMap::SpinToPseudospin);
    CHECK(twice.params.v1 == s.params.v1);
    CHECK(twice.params.v2 == s.params.v2);
    CHECK(twice.context.sym_const == s.context.sym_const);
    CHECK(twice.branch == s.branch);

    const auto eck = apply_case_map(s, CaseMap::Eckart);
    CHECK(eck.params.v1 == -s.params.v1);
    CHECK(eck.params.v2 == -s.params.v2);
    CHECK(eck.branch == s.branch);

    const auto pt = apply_case_map(s, CaseMap::PTSymmetric);
    CHECK(pt.pt_imaginary_v2);
}

TEST_CASE("s-wave and Eckart specializations agree with the general forms") {
    for (double E : {-2.0, 0.0, 1.5, 3.0}) {
        // general spin residual at kappa = -1 equals the s-wave form
        auto gen = sample_swave(1);
        gen.context.sym_const = 0.25;
        auto sw = gen;
        sw.branch = ResidualBranch::SWaveSpin;
        const auto a = residual(E, gen);
        const auto b = residual(E, sw);
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(*a == doctest::Approx(*b).epsilon(1e-12));

        // exact-symmetry branch is the general one at C_s = 0
        auto exact = sample_swave(1);
        exact.branch = ResidualBranch::SpinExact;
        exact.context.sym_const = 0.7; // ignored by the exact branch
        auto gen0 = sample_swave(1);
        const auto c = residual(E, exact);
        const auto d = residual(E, gen0);
        REQUIRE(c.has_value());
        REQUIRE(d.has_value());
        CHECK(*c == doctest::Approx(*d).epsilon(1e-12));

        // Eckart form is the sign-mapped s-wave form
        auto eck = sample_swave(1);
        eck.branch = ResidualBranch::EckartSpin;
        auto mapped = apply_case_map(sw, CaseMap::Eckart);
        mapped.context.sym_const = 0.0;
        auto eck0 = eck;
        eck0.context.sym_const = 0.0;
        const auto e1 = residual(E, eck0);
        const auto e2 = residual(E, mapped);
        if (e1 && e2) {
            CHECK(*e1 == doctest::Approx(*e2).epsilon(1e-12));
        } else {
            CHECK(e1.has_value() == e2.has_value());
        }
    }
}

TEST_CASE("pseudospin s-wave reduction at kappa = 1") {
    EnergyResidualSpec ps;
    ps.branch = ResidualBranch::Pseudospin;
    ps.params = {-3.0, 1.0, 0.5, 1.0};
    ps.context = {5.0, 1.0, Symmetry::Pseudospin, 0.0};
    ps.qn = {0, 1}; // omega_tilde = 0
    ps.coeffs = pekeris::matched_coeffs(0.5, 1.0);
    auto sw = ps;
    sw.branch = ResidualBranch::SWavePseudo;
    for (double E : {-3.0, -1.0, 0.5, 2.0}) {
        const auto a = residual(E, ps);
        const auto b = residual(E, sw);
        CHECK(a.has_value() == b.has_value());
        if (a && b) {
            CHECK(*a == doctest::Approx(*b).epsilon(1e-12));
        }
    }
}

TEST_CASE("found states satisfy the engine quantization") {
    auto s = sample_centrifugal(1, -2);
    const auto states = solve_bound_states(s, default_window(s.params, s.context));
    REQUIRE(!states.empty());
    for (const auto& b : states) {
        const auto prob = nu::rosen_morse_instance(s.params, s.context, b.qn, b.energy,
                                                   s.coeffs);
        const auto d = nu::derive(prob);
        CHECK(std::fabs(nu::energy_relation(prob, d, b.qn.n)) < 1e-9);
    }
}

TEST_CASE("nonrelativistic closed form") {
    const PotentialParams p{3.0, 1.0, 0.5, 1.0};
    const pekeris::PekerisCoeffs c0;

    // free case: no bound level on the normalizable branch, published
    // placement reproduces the quoted arithmetic
    const PotentialParams free_p{0.0, 0.0, 0.5, 1.0};
    CHECK_THROWS_AS(nonrelativistic_energy(0, 0, free_p, 2.0, c0), std::domain_error);
    for (int n : {0, 1, 2}) {
        const double printed =
            nonrelativistic_energy(n, 0, free_p, 2.0, c0, 1.0, Quantization::AsPrinted);
        CHECK(printed ==
              doctest::Approx(-(0.25) / (2.0 * 2.0) * (n + 1.0) * (n + 1.0)).epsilon(1e-13));
    }

    // pure well reproduces the classical closed form
    const PotentialParams sech{3.0, 0.0, 0.5, 1.0};
    const double mu = 1.0;
    const double sbar = 0.5 * (-1.0 + std::sqrt(1.0 + 8.0 * mu * sech.v1 / 0.25));
    for (int n = 0; n * 1.0 < sbar; ++n) {
        const double expected = -(0.25 / (2.0 * mu)) * (sbar - n) * (sbar - n);
        CHECK(nonrelativistic_energy(n, 0, sech, mu, c0) ==
              doctest::Approx(expected).epsilon(1e-12));
        if (n >= 2) {
            break;
        }
    }

    CHECK_THROWS_AS(nonrelativistic_energy(0, 0, p, -1.0, c0), std::invalid_argument);
}

TEST_CASE("PT-symmetric evaluators") {
    const PotentialParams p{3.0, 1.2, 0.5, 2.0};
    const auto coeffs = pekeris::matched_coeffs(p.alpha, p.r_e);

    // v2 = 0 collapses the complex level onto the real one
    PotentialParams p0 = p;
    p0.v2 = 0.0;
    const auto e0 = pt_energy_nonrel(1, 1, p0, 3.0, coeffs);
    CHECK(std::fabs(e0.imag()) < 1e-14);
    CHECK(e0.real() ==
          doctest::Approx(nonrelativistic_energy(1, 1, p0, 3.0, coeffs)).epsilon(1e-12));

    CHECK_THROWS_AS(pt_energy_nonrel(0, 0, PotentialParams{-1.0, 1.0, 0.5, 1.0}, 2.0, coeffs),
                    std::domain_error);

    // complex residual reduces to the real exact-symmetry residual at v2 = 0
    EnergyResidualSpec s;
    s.branch = ResidualBranch::SpinExact;
    s.params = p0;
    s.context = {5.0, 1.0, Symmetry::Spin, 0.0};
    s.qn = {0, -1};
    s.coeffs = coeffs;
    const auto pt = apply_case_map(s, CaseMap::PTSymmetric);
    for (double E : {-1.0, 1.0, 3.2}) {
        const auto rr = spin_residual(E, s);
        const auto cc = pt_spin_residual({E, 0.0}, pt);
        if (rr) {
            CHECK(std::abs(cc - std::complex<double>(*rr)) <
                  1e-10 * std::max(1.0, std::fabs(*rr)));
        }
    }

    // finite at generic complex trial energies
    auto full = s;
    full.params = p;
    const auto v = pt_spin_residual({1.3, 0.8}, apply_case_map(full, CaseMap::PTSymmetric));
    CHECK(std::isfinite(v.real()));
    CHECK(std::isfinite(v.imag()));

    // conjugation carries V2 -> -V2 in the residual
    auto plus = apply_case_map(full, CaseMap::PTSymmetric);
    auto minus = plus;
    minus.params.v2 = -plus.params.v2;
    const std::complex<double> E{0.9, 0.35};
    const auto lhs = pt_spin_residual(std::conj(E), plus);
    const auto rhs = std::conj(pt_spin_residual(E, minus));
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(rhs)));
}

TEST_CASE("default windows") {
    PotentialParams p{3.0, 1.0, 0.5, 1.0};
    PhysicalContext spin{5.0, 1.0, Symmetry::Spin, 0.0};
    const auto ws = default_window(p, spin);
    CHECK(ws.e_min == doctest::Approx(-5.0 + 5e-9));
    CHECK(ws.e_max == doctest::Approx(6.0 - 5e-9));
    PhysicalContext pseudo{5.0, 1.0, Symmetry::Pseudospin, 0.0};
    const auto wp = default_window(p, pseudo);
    CHECK(wp.e_min == doctest::Approx(-4.0 + 5e-9));
    CHECK(wp.e_max == doctest::Approx(5.0 - 5e-9));
}
