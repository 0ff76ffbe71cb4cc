#include "rmdirac/validate.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <sstream>

#include "rmdirac/detail/radial.hpp"
#include "rmdirac/model.hpp"
#include "rmdirac/nu.hpp"
#include "rmdirac/oracle.hpp"
#include "rmdirac/pekeris.hpp"
#include "rmdirac/specfun.hpp"
#include "rmdirac/spectra.hpp"
#include "rmdirac/wavefun.hpp"

namespace rmdirac::validate {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

struct ConfirmedState {
    BoundState state;
    PotentialParams params;
    PhysicalContext context;
    pekeris::PekerisCoeffs coeffs;
};

// ---- shared fixtures -------------------------------------------------

// exact-case sample well (s-wave, approximation absent)
spectra::EnergyResidualSpec exact_case_spec(int n) {
    spectra::EnergyResidualSpec s;
    s.branch = spectra::ResidualBranch::SpinGeneral;
    s.params = {3.0, 1.0, 0.5, 1.0};
    s.context = {5.0, 1.0, Symmetry::Spin, 0.0};
    s.qn = {n, -1};
    s.coeffs = pekeris::matched_coeffs(s.params.alpha, s.params.r_e);
    return s;
}

// approximate-case sample wells (states localized near r_e)
PotentialParams approx_params() { return {5.0, -1.5, 0.35, 2.5}; }

std::vector<BoundState> analytic_states(const spectra::EnergyResidualSpec& base, int n_max) {
    std::vector<BoundState> all;
    for (int n = 0; n <= n_max; ++n) {
        auto s = base;
        s.qn.n = n;
        const auto w = spectra::default_window(s.params, s.context);
        auto found = spectra::solve_bound_states(s, w);
        if (found.empty()) {
            break;
        }
        all.insert(all.end(), found.begin(), found.end());
    }
    return all;
}

oracle::OracleResult confirm(const BoundState& b, const PotentialParams& p,
                             const PhysicalContext& ctx, oracle::CentrifugalMode mode,
                             const pekeris::PekerisCoeffs& coeffs, int base_points) {
    oracle::OracleOptions opt;
    opt.domain = oracle::Domain::ExtendedLine;
    opt.base_points = base_points;
    opt.target_energy = b.energy;
    const double span = 0.3 * std::max(1.0, std::fabs(b.energy));
    opt.e_min = b.energy - span;
    opt.e_max = b.energy + span;
    // the Richardson error estimate of the 2N-grid value sits near 1e-5 at
    // these grids; the criteria compare the extrapolated energies directly
    const double tol = 2e-4 * std::max(1.0, std::fabs(b.energy));
    return oracle::self_consistent_energy(b.qn.n, p, ctx, b.qn, mode, coeffs, tol, opt);
}

// ---- criteria --------------------------------------------------------

CriterionResult criterion_exact_case(std::vector<ConfirmedState>& confirmed, bool quick) {
    const auto t0 = Clock::now();
    CriterionResult r{1, "exact-case eigenvalue agreement (s-wave sample well)", true, false, ""};
    const int pts = quick ? 2000 : 4000;
    double worst = 0.0;
    int count = 0;
    for (int n = 0;; ++n) {
        auto s = exact_case_spec(n);
        const auto states = spectra::solve_bound_states(
            s, spectra::default_window(s.params, s.context));
        if (states.empty()) {
            break;
        }
        for (const auto& b : states) {
            const auto o = confirm(b, s.params, s.context, oracle::CentrifugalMode::Exact,
                                   s.coeffs, pts);
            if (!o.found || !o.converged) {
                r.passed = false;
                r.detail += "n=" + std::to_string(n) + " unconfirmed; ";
                continue;
            }
            const double gap = std::fabs(o.energy - b.energy) / std::fabs(b.energy);
            worst = std::max(worst, gap);
            ++count;
            confirmed.push_back({b, s.params, s.context, s.coeffs});
        }
    }
    const double dt = seconds_since(t0);
    if (count == 0 || worst > 1e-6 || dt >= 30.0) {
        r.passed = false;
    }
    r.detail = std::to_string(count) + " states, worst rel gap " + fmt(worst) + ", " +
               fmt(dt) + " s (limit 30)" + (r.detail.empty() ? "" : "; " + r.detail);
    return r;
}

CriterionResult criterion_approx_case(std::vector<ConfirmedState>& confirmed, bool quick) {
    CriterionResult r{2, "approximate-case agreement (kappa in {1, 2, -2}, Pekeris mode)",
                      true, false, ""};
    const int pts = quick ? 2000 : 4000;
    const int n_max = quick ? 1 : 2;
    double worst = 0.0;
    int count = 0;

    const auto run_branch = [&](const PotentialParams& p, const PhysicalContext& ctx,
                                spectra::ResidualBranch branch) {
        const auto coeffs = pekeris::matched_coeffs(p.alpha, p.r_e);
        for (int kappa : {1, 2, -2}) {
            spectra::EnergyResidualSpec s;
            s.branch = branch;
            s.params = p;
            s.context = ctx;
            s.coeffs = coeffs;
            s.qn = {0, kappa};
            const auto states = analytic_states(s, n_max);
            for (const auto& b : states) {
                const auto o = confirm(b, p, ctx, oracle::CentrifugalMode::Pekeris, coeffs, pts);
                if (!o.found || !o.converged) {
                    r.passed = false;
                    r.detail += "kappa=" + std::to_string(kappa) + " n=" +
                                std::to_string(b.qn.n) + " unconfirmed; ";
                    continue;
                }
                const double gap = std::fabs(o.energy - b.energy) /
                                   std::max(1e-12, std::fabs(b.energy));
                worst = std::max(worst, gap);
                ++count;
                confirmed.push_back({b, p, ctx, coeffs});
            }
        }
    };

    run_branch(approx_params(), {8.0, 1.0, Symmetry::Spin, 0.0},
               spectra::ResidualBranch::SpinGeneral);
    {
        PotentialParams pm = approx_params();
        pm.v1 = -pm.v1;
        pm.v2 = -pm.v2;
        run_branch(pm, {8.0, 1.0, Symmetry::Pseudospin, 0.0},
                   spectra::ResidualBranch::Pseudospin);
    }

    if (count == 0 || worst > 1e-5) {
        r.passed = false;
    }
    r.detail = std::to_string(count) + " states, worst rel gap " + fmt(worst) +
               (r.detail.empty() ? "" : "; " + r.detail);
    return r;
}

CriterionResult criterion_pseudospin_map(bool quick) {
    const auto t0 = Clock::now();
    CriterionResult r{3, "pseudospin parameter map (roots of mapped spin problem)", true,
                      false, ""};
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const int sets = quick ? 12 : 50;
    const int kappas[] = {1, -1, 2, -2, 3};
    double worst = 0.0;
    int compared = 0;
    for (int i = 0; i < sets; ++i) {
        spectra::EnergyResidualSpec ps;
        ps.branch = spectra::ResidualBranch::Pseudospin;
        ps.params.v1 = -6.0 + 12.0 * u01(rng);
        ps.params.v2 = -2.0 + 4.0 * u01(rng);
        ps.params.alpha = 0.25 + 0.75 * u01(rng);
        ps.params.r_e = 1.0 + 3.0 * u01(rng);
        ps.context = {3.0 + 7.0 * u01(rng), 1.0, Symmetry::Pseudospin,
                      -0.5 + 1.0 * u01(rng)};
        ps.qn = {static_cast<int>(3.0 * u01(rng)), kappas[rng() % 5]};
        ps.coeffs = pekeris::matched_coeffs(ps.params.alpha, ps.params.r_e);

        const auto sp = spectra::apply_case_map(ps, spectra::CaseMap::SpinToPseudospin);
        std::vector<BoundState> rp, rs;
        try {
            rp = spectra::solve_bound_states(ps, spectra::default_window(ps.params, ps.context));
            rs = spectra::solve_bound_states(sp, spectra::default_window(sp.params, sp.context));
        } catch (const std::exception&) {
            continue;
        }
        if (rp.size() != rs.size()) {
            r.passed = false;
            r.detail += "set " + std::to_string(i) + ": root counts differ; ";
            continue;
        }
        for (std::size_t k = 0; k < rp.size(); ++k) {
            // spin roots map back with E -> -E; both lists are energy sorted
            const double dev =
                std::fabs(rp[k].energy + rs[rs.size() - 1 - k].energy) / ps.context.mc2;
            worst = std::max(worst, dev);
            ++compared;
        }
    }
    const double dt = seconds_since(t0);
    if (compared < 10 || worst > 1e-10 || dt >= 60.0) {
        r.passed = false;
    }
    r.detail = std::to_string(compared) + " root pairs, worst |E_ps + E_spin|/mc2 " +
               fmt(worst) + ", " + fmt(dt) + " s (limit 60)" +
               (r.detail.empty() ? "" : "; " + r.detail);
    return r;
}

CriterionResult criterion_wavefunctions(const std::vector<ConfirmedState>& confirmed,
                                        double delta_perturbation) {
    CriterionResult r{4, "wavefunction ODE residual, node count, boundary decay", true, false,
                      ""};
    if (confirmed.empty()) {
        r.passed = false;
        r.detail = "no confirmed states from criteria 1-2";
        return r;
    }
    double worst_res = 0.0;
    double worst_decay = 0.0;
    for (const auto& c : confirmed) {
        auto state = c.state;
        state.decay_left *= (1.0 + delta_perturbation);
        const auto sol = wavefun::make_solution(state, c.params, c.context, c.coeffs);
        const double a = c.params.alpha;
        const double eps = state.epsilon, epsl = state.decay_left;
        const double r_peak = 0.5 / a * std::log(epsl / eps);
        const double lo = r_peak - 23.0 / (2.0 * a * epsl) - 3.0 / a;
        const double hi = r_peak + 23.0 / (2.0 * a * eps) + 3.0 / a;

        // residual on an interior grid
        std::vector<double> grid(151);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            grid[i] = lo + (hi - lo) * static_cast<double>(i) / (grid.size() - 1);
        }
        const auto res = wavefun::ode_residual(sol, grid);
        for (double v : res) {
            worst_res = std::max(worst_res, std::fabs(v));
        }

        // node count and boundary decay on a dense grid
        const int m = 20001;
        double fmax = 0.0;
        std::vector<double> f(m);
        for (int i = 0; i < m; ++i) {
            const double rr = lo + (hi - lo) * i / (m - 1);
            f[i] = detail::bound_shape(rr, state.qn.n, eps, epsl, a);
            fmax = std::max(fmax, std::fabs(f[i]));
        }
        int nodes = 0;
        double prev = 0.0;
        for (int i = 0; i < m; ++i) {
            if (std::fabs(f[i]) < 1e-9 * fmax) {
                continue;
            }
            if (prev != 0.0 && (f[i] > 0.0) != (prev > 0.0)) {
                ++nodes;
            }
            prev = f[i];
        }
        if (nodes != state.qn.n) {
            r.passed = false;
            r.detail += "node count " + std::to_string(nodes) + " != n=" +
                        std::to_string(state.qn.n) + "; ";
        }
        worst_decay = std::max(worst_decay,
                               std::max(std::fabs(f.front()), std::fabs(f.back())) / fmax);
    }
    if (worst_res > 1e-6 || worst_decay > 1e-8) {
        r.passed = false;
    }
    r.detail = std::to_string(confirmed.size()) + " states, worst residual " + fmt(worst_res) +
               ", worst boundary ratio " + fmt(worst_decay) +
               (r.detail.empty() ? "" : "; " + r.detail);
    return r;
}

CriterionResult criterion_normalization(bool quick) {
    CriterionResult r{5, "normalization: quadrature unit integral and closed-form agreement",
                      true, false, ""};
    struct Set {
        double mc2, v1, v2, alpha, r_e;
    };
    const Set sets[] = {
        {8.0, 5.0, -1.5, 0.35, 2.5},  {10.0, 6.0, -2.0, 0.35, 3.0},
        {12.0, 5.5, -1.0, 0.30, 3.5}, {9.0, 7.0, -2.5, 0.40, 2.5},
        {11.0, 6.5, -1.8, 0.35, 3.0}, {10.0, 8.0, -2.2, 0.45, 2.2},
        {14.0, 6.0, -1.2, 0.30, 3.2}, {9.5, 5.2, -2.8, 0.38, 2.8},
        {13.0, 7.5, -1.6, 0.42, 2.6}, {8.5, 6.2, -1.2, 0.32, 2.9},
    };
    const int nsets = quick ? 3 : 10;
    double worst_pair = 0.0;
    double worst_unit = 0.0;
    int states = 0;
    for (int i = 0; i < nsets; ++i) {
        spectra::EnergyResidualSpec s;
        s.branch = spectra::ResidualBranch::SpinGeneral;
        s.params = {sets[i].v1, sets[i].v2, sets[i].alpha, sets[i].r_e};
        s.context = {sets[i].mc2, 1.0, Symmetry::Spin, 0.0};
        s.qn = {0, 2};
        s.coeffs = pekeris::matched_coeffs(s.params.alpha, s.params.r_e);
        for (int n = 0; n <= 3; ++n) {
            s.qn.n = n;
            const auto found =
                spectra::solve_bound_states(s, spectra::default_window(s.params, s.context));
            if (found.empty()) {
                continue;
            }
            const auto sol = wavefun::make_solution(found.back(), s.params, s.context, s.coeffs);
            const double nq = wavefun::normalization_quadrature(sol);
            const double nc = wavefun::normalization_closed_form(sol);
            worst_pair = std::max(worst_pair, std::fabs(nc - nq) / nq);

            // independent unit-integral check: composite Simpson over the support
            const double eps = sol.state.epsilon, epsl = sol.state.decay_left;
            const double a = s.params.alpha;
            const double r_peak = 0.5 / a * std::log(epsl / eps);
            const double lo = r_peak - 28.0 / (2.0 * a * epsl) - 3.0 / a;
            const double hi = r_peak + 28.0 / (2.0 * a * eps) + 3.0 / a;
            const int m = 40001;
            const double h = (hi - lo) / (m - 1);
            double acc = 0.0;
            for (int k = 0; k < m; ++k) {
                const double rr = lo + k * h;
                const double f = nq * detail::bound_shape(rr, n, eps, epsl, a);
                const double w = (k == 0 || k == m - 1) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
                acc += w * f * f;
            }
            acc *= h / 3.0;
            worst_unit = std::max(worst_unit, std::fabs(acc - 1.0));
            ++states;
        }
    }
    if (states == 0 || worst_pair > 1e-5 || worst_unit > 1e-10) {
        r.passed = false;
    }
    r.detail = std::to_string(states) + " states, closed-vs-quadrature " + fmt(worst_pair) +
               ", unit-integral dev " + fmt(worst_unit);
    return r;
}

CriterionResult criterion_nu_engine(const std::vector<ConfirmedState>& confirmed) {
    CriterionResult r{6, "NU engine: constant table, c10 identity, quantization residual",
                      true, false, ""};
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    // constant-table reproduction from random positive placeholders
    double worst_table = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double b1 = 0.1 + 5.0 * u01(rng);
        const double b2 = -2.0 + 4.0 * u01(rng);
        const double e2 = 0.1 + 4.0 * u01(rng);
        if (b1 - b2 + e2 + 0.25 < 0.0) {
            continue;
        }
        nu::NUProblem p{1, 1, 1, 1, b1, b2, e2};
        const auto d = nu::derive(p);
        const double eps = std::sqrt(e2);
        const double delta = std::sqrt(b1 - b2 + e2 + 0.25) - 0.5;
        const double devs[] = {
            d.c5 - 0.0,           d.c6 + 0.5,
            d.c7 - (0.25 + b1),   d.c8 + b2,
            d.c9 - e2,            d.c10 - (delta + 0.5) * (delta + 0.5),
            d.c11 - 2.0 * eps,    d.c12 - (2.0 * delta + 1.0),
            d.c13 - eps,          d.c14 - (delta + 1.0),
            d.c15 - (2.0 * delta + 1.0), d.c16 - (delta + 1.0)};
        for (double v : devs) {
            worst_table = std::max(worst_table, std::fabs(v));
        }
    }

    // c10 = (delta + 1/2)^2 for exponential-variable instances at random draws
    double worst_c10 = 0.0;
    for (int i = 0; i < 100; ++i) {
        PotentialParams p{-4.0 + 10.0 * u01(rng), -2.0 + 4.0 * u01(rng), 0.3 + 0.7 * u01(rng),
                          1.0 + 2.0 * u01(rng)};
        PhysicalContext ctx{3.0 + 6.0 * u01(rng), 1.0, Symmetry::Spin, -0.4 + 0.8 * u01(rng)};
        QuantumNumbers qn{0, (u01(rng) < 0.5) ? -2 : 2};
        const auto coeffs = pekeris::matched_coeffs(p.alpha, p.r_e);
        const double E = -0.5 * ctx.mc2 + ctx.mc2 * u01(rng);
        try {
            const auto prob = nu::rosen_morse_exponential_instance(p, ctx, qn, E, coeffs);
            const auto d = nu::derive(prob);
            const auto t = detail::radial_terms(E, p, ctx, qn.kappa, coeffs);
            if (std::isnan(t.delta)) {
                continue;
            }
            worst_c10 = std::max(worst_c10,
                                 std::fabs(d.c10 - (t.delta + 0.5) * (t.delta + 0.5)));
        } catch (const std::exception&) {
            continue;
        }
    }

    // quantization residual at every oracle-confirmed energy
    double worst_a10 = 0.0;
    for (const auto& c : confirmed) {
        const auto prob = nu::rosen_morse_instance(c.params, c.context, c.state.qn,
                                                   c.state.energy, c.coeffs);
        const auto d = nu::derive(prob);
        worst_a10 = std::max(worst_a10,
                             std::fabs(nu::energy_relation(prob, d, c.state.qn.n)));
    }

    // zero-placeholder arithmetic example
    nu::NUProblem zp{1, 1, 1, 1, 0.0, 0.0, 0.0};
    const auto zd = nu::derive(zp);
    const double zr = nu::energy_relation(zp, zd, 0);

    if (worst_table > 1e-12 || worst_c10 > 1e-10 || worst_a10 > 1e-9 ||
        std::fabs(zr - 1.0) != 0.0 || confirmed.empty()) {
        r.passed = false;
    }
    r.detail = "table dev " + fmt(worst_table) + ", c10 dev " + fmt(worst_c10) +
               ", quantization residual " + fmt(worst_a10) + " over " +
               std::to_string(confirmed.size()) + " states, zero-case residual " +
               std::to_string(zr);
    return r;
}

CriterionResult criterion_pekeris() {
    CriterionResult r{7, "Pekeris contact identities", true, false, ""};
    double worst = 0.0;
    for (double t : {0.5, 1.0, 2.0, 5.0, 10.0}) {
        const double alpha = 0.7;
        const double re = t / alpha;
        const auto c = pekeris::matched_coeffs(alpha, re);
        const auto res = pekeris::contact_residuals(alpha, re, c);
        worst = std::max({worst, std::fabs(res.value), std::fabs(res.first),
                          std::fabs(res.second)});
    }
    if (worst > 1e-10) {
        r.passed = false;
    }
    r.detail = "worst scaled contact residual " + fmt(worst);
    return r;
}

CriterionResult criterion_nonrel_limit() {
    CriterionResult r{8, "nonrelativistic limit of the spin-branch levels", true, false, ""};
    const PotentialParams p{3.0, 1.0, 0.5, 1.0};
    const pekeris::PekerisCoeffs c0; // omega = 0, coefficients unused
    double prev_gap = -1.0;
    double final_rel = 0.0;
    bool monotone = true;
    for (double scale : {10.0, 100.0, 1000.0}) {
        const double mc2 = 5.0 * scale;
        spectra::EnergyResidualSpec s;
        s.branch = spectra::ResidualBranch::SpinGeneral;
        s.params = p;
        s.context = {mc2, 1.0, Symmetry::Spin, 0.0};
        s.qn = {0, -1};
        s.coeffs = c0;
        spectra::SearchWindow w;
        w.e_min = mc2 - 4.5;
        w.e_max = mc2 + p.v2 - 1e-9 * mc2;
        const auto states = spectra::solve_bound_states(s, w);
        if (states.empty()) {
            r.passed = false;
            r.detail += "no state at scale " + fmt(scale) + "; ";
            continue;
        }
        const double e60 = spectra::nonrelativistic_energy(0, 0, p, mc2, c0);
        const double gap = std::fabs((states.back().energy - mc2) - e60);
        if (prev_gap >= 0.0 && gap >= prev_gap) {
            monotone = false;
        }
        prev_gap = gap;
        final_rel = gap / std::fabs(e60);
    }
    if (!monotone || final_rel >= 1e-2) {
        r.passed = false;
    }
    r.detail += "gap decreasing: " + std::string(monotone ? "yes" : "no") +
                ", final rel gap " + fmt(final_rel) + " (limit 1e-2)";
    return r;
}

CriterionResult criterion_oracle_selftests() {
    CriterionResult r{9, "oracle self-tests: box and oscillator spectra, convergence order",
                      true, false, ""};
    const auto zero = [](double) { return 0.0; };
    const auto osc = [](double x) { return x * x; };
    constexpr double kPi = 3.14159265358979323846;

    oracle::GridSpec box{0.0, 1.0, 4000};
    const auto lam = oracle::eigenvalues_fd(zero, box, 3);
    double worst = 0.0;
    for (int k = 1; k <= 3; ++k) {
        const double exact = kPi * kPi * k * k;
        worst = std::max(worst, std::fabs(lam[k - 1] - exact) / exact);
    }

    oracle::GridSpec og{0.0, 20.0, 4000};
    const auto lo = oracle::eigenvalues_fd(osc, og, 3);
    const double exact_osc[] = {3.0, 7.0, 11.0};
    for (int k = 0; k < 3; ++k) {
        worst = std::max(worst, std::fabs(lo[k] - exact_osc[k]) / exact_osc[k]);
    }

    // order check on the box ground state
    oracle::GridSpec coarse{0.0, 1.0, 1000};
    oracle::GridSpec fine{0.0, 1.0, 2000};
    const double e1 = oracle::eigenvalues_fd(zero, coarse, 1)[0] - kPi * kPi;
    const double e2 = oracle::eigenvalues_fd(zero, fine, 1)[0] - kPi * kPi;
    const double order = std::log2(std::fabs(e1 / e2)) /
                         std::log2((1999.0) / (999.0)) * 1.0;

    if (worst > 1e-4 || std::fabs(order - 2.0) > 0.2) {
        r.passed = false;
    }
    r.detail = "worst spectrum rel err " + fmt(worst) + ", measured order " + fmt(order);
    return r;
}

CriterionResult criterion_specfun() {
    CriterionResult r{10, "special functions: identities and cross-routes", true, false, ""};
    using namespace specfun;
    double worst = 0.0;
    const auto note = [&](double dev, double tol) {
        worst = std::max(worst, dev / tol); // normalized so > 1 means failure
    };

    note(std::fabs(ln_gamma(1.0)), 1e-14);
    note(std::fabs(ln_gamma(5.0) - std::log(24.0)), 1e-13);
    note(std::fabs(ln_gamma(0.5) - 0.5 * std::log(3.14159265358979323846)), 1e-13);
    note(std::fabs(pochhammer(3.0, 2) - 12.0), 1e-14);
    note(std::fabs(pochhammer(0.0, 3)), 1e-300);
    note(std::fabs(jacobi_p(1, 2.0, 3.0, 0.5) - 1.25), 1e-14);
    note(std::fabs(hyp2f1(-1.0, 2.0, 3.0, 0.5) - 2.0 / 3.0), 1e-14);
    note(std::fabs(hyp2f1(1.0, 1.0, 2.0, 0.5) - 2.0 * std::log(2.0)), 1e-13);
    note(std::fabs(hyp3f2_unit(2.0, -1.0, 3.0, 4.0, 5.0) - 0.7), 1e-14);

    const auto rule2 = gauss_legendre(2);
    double q = 0.0;
    for (std::size_t i = 0; i < rule2.nodes.size(); ++i) {
        q += rule2.weights[i] * rule2.nodes[i] * rule2.nodes[i];
    }
    note(std::fabs(q - 2.0 / 3.0), 1e-14);

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    // derivative relation of the Gauss series, central differences
    double worst_deriv = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double a = 0.2 + 2.0 * u01(rng);
        const double b = 0.2 + 2.0 * u01(rng);
        const double c = 1.2 + 2.0 * u01(rng);
        const double z = -0.5 + 1.0 * u01(rng) * 0.99;
        const double h = 1e-5;
        const double num = (hyp2f1(a, b, c, z + h) - hyp2f1(a, b, c, z - h)) / (2.0 * h);
        const double closed = a * b / c * hyp2f1(a + 1.0, b + 1.0, c + 1.0, z);
        worst_deriv = std::max(worst_deriv,
                               std::fabs(num - closed) / std::max(1.0, std::fabs(closed)));
    }
    note(worst_deriv, 1e-7);

    // Jacobi polynomial vs terminating Gauss series on the argument range
    // the solutions use (s < 1/2 for positive radii)
    double worst_jac = 0.0;
    for (int i = 0; i < 40; ++i) {
        const int n = 1 + static_cast<int>(10.0 * u01(rng));
        const double a = -0.5 + 3.0 * u01(rng);
        const double b = -0.5 + 3.0 * u01(rng);
        const double s = 0.02 + 0.46 * u01(rng);
        double nfact = 1.0;
        for (int k = 2; k <= n; ++k) {
            nfact *= k;
        }
        const double lhs = jacobi_p(n, a, b, 1.0 - 2.0 * s);
        const double rhs = pochhammer(a + 1.0, n) / nfact *
                           hyp2f1(-n, n + a + b + 1.0, a + 1.0, s);
        worst_jac = std::max(worst_jac, std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs)));
    }
    note(worst_jac, 1e-11);

    if (worst > 1.0) {
        r.passed = false;
    }
    r.detail = "worst tolerance fraction " + fmt(worst) + ", derivative relation " +
               fmt(worst_deriv) + ", Jacobi/series dev " + fmt(worst_jac);
    return r;
}

CriterionResult criterion_pt_case() {
    CriterionResult r{11, "PT-symmetric case: complex level formula and residual reduction",
                      true, false, ""};
    const PotentialParams p{3.0, 1.2, 0.5, 2.0};
    const auto coeffs = pekeris::matched_coeffs(p.alpha, p.r_e);
    double worst = 0.0;

    // route 1: the dedicated complex evaluator; route 2: the real-level
    // formula re-evaluated with V2 -> i V2 by hand
    for (int l : {0, 1}) {
        for (int n : {0, 1}) {
            const double mu = 4.0;
            const auto e_pt = spectra::pt_energy_nonrel(n, l, p, mu, coeffs);
            const double a2 = p.alpha * p.alpha, re2 = p.r_e * p.r_e;
            const double omega = static_cast<double>(l) * (l + 1);
            const double rad = 1.0 + 8.0 * mu * p.v1 / a2 + omega * coeffs.d2 / (a2 * re2);
            const double dt0 = 0.5 * (-1.0 + std::sqrt(rad));
            const double sigma = dt0 - n;
            const std::complex<double> iv2(0.0, p.v2);
            const std::complex<double> qq =
                -mu * iv2 / a2 + omega * (coeffs.d2 - coeffs.d1) / (4.0 * a2 * re2);
            const std::complex<double> br = qq / sigma - sigma;
            const std::complex<double> e_map =
                iv2 + omega * coeffs.d0 / (2.0 * mu * re2) - a2 / (2.0 * mu) * br * br;
            worst = std::max(worst, std::abs(e_pt - e_map));
        }
    }

    // V2 = 0 reduction of the complex residual to the exact-symmetry one
    spectra::EnergyResidualSpec s;
    s.branch = spectra::ResidualBranch::SpinExact;
    s.params = {3.0, 0.0, 0.5, 2.0};
    s.context = {5.0, 1.0, Symmetry::Spin, 0.0};
    s.qn = {0, -1};
    s.coeffs = coeffs;
    auto pt = spectra::apply_case_map(s, spectra::CaseMap::PTSymmetric);
    double worst_red = 0.0;
    for (double E : {-1.0, 0.5, 2.0, 3.5}) {
        const auto real_res = spectra::spin_residual(E, s);
        const auto cres = spectra::pt_spin_residual({E, 0.0}, pt);
        if (real_res) {
            worst_red = std::max(worst_red, std::abs(cres - std::complex<double>(*real_res)));
        }
    }

    if (worst > 1e-12 || worst_red > 1e-10) {
        r.passed = false;
    }
    r.detail = "formula route dev " + fmt(worst) + ", V2=0 reduction dev " + fmt(worst_red);
    return r;
}

CriterionResult info_published_coefficient_gap() {
    CriterionResult r{12, "published vs contact-matched Pekeris coefficients", true, true, ""};
    const auto pc = pekeris::published_coeffs(0.7, 1.0 / 0.7);
    const auto mc = pekeris::matched_coeffs(0.7, 1.0 / 0.7);
    std::ostringstream os;
    os << "alpha r_e = 1: published (d0, d1, d2) = (" << pc.d0 << ", " << pc.d1 << ", " << pc.d2
       << "), contact-matched = (" << mc.d0 << ", " << mc.d1 << ", " << mc.d2
       << "); d0 and d2 agree, the published d1 bracket collapses and disagrees";
    r.detail = os.str();
    return r;
}

CriterionResult info_printed_branch_classification() {
    CriterionResult r{13, "published root-placement classification against the oracle", true,
                      true, ""};
    auto s = exact_case_spec(0);
    s.quantization = spectra::Quantization::AsPrinted;
    const auto states =
        spectra::solve_bound_states(s, spectra::default_window(s.params, s.context));
    int unconfirmed = 0;
    std::ostringstream os;
    for (const auto& b : states) {
        const auto o = confirm(b, s.params, s.context, oracle::CentrifugalMode::Exact, s.coeffs,
                               2000);
        const bool conf = o.found && o.converged &&
                          std::fabs(o.energy - b.energy) < 1e-5 * std::fabs(b.energy);
        if (!conf) {
            ++unconfirmed;
        }
        os << "E=" << b.energy << (conf ? " confirmed " : " unconfirmed ");
    }
    r.detail = "n=0 roots with the published n+delta+1 placement: " + os.str() +
               "(" + std::to_string(unconfirmed) + " of " + std::to_string(states.size()) +
               " unconfirmed; the normalizable placement delta-n is the one the oracle "
               "confirms)";
    return r;
}

CriterionResult info_half_line_gap(const std::vector<ConfirmedState>& confirmed) {
    CriterionResult r{14, "radial half-line (exact centrifugal) gap of the analytic levels",
                      true, true, ""};
    std::ostringstream os;
    int shown = 0;
    for (const auto& c : confirmed) {
        if (shown >= 2) {
            break;
        }
        oracle::OracleOptions opt;
        opt.domain = oracle::Domain::RadialHalfLine;
        opt.base_points = 2000;
        opt.target_energy = c.state.energy;
        const auto o = oracle::self_consistent_energy(c.state.qn.n, c.params, c.context,
                                                      c.state.qn, oracle::CentrifugalMode::Exact,
                                                      c.coeffs, 1e-6, opt);
        if (o.found) {
            os << "kappa=" << c.state.qn.kappa << " n=" << c.state.qn.n << ": analytic "
               << c.state.energy << ", radial-wall oracle " << o.energy << " (rel gap "
               << fmt(std::fabs(o.energy - c.state.energy) /
                      std::fabs(c.state.energy))
               << "); ";
            ++shown;
        }
    }
    r.detail = "approximation error of treating the analytic levels as radial Dirichlet "
               "eigenvalues: " + (os.str().empty() ? std::string("(none computed)") : os.str());
    return r;
}

} // namespace

std::vector<CriterionResult> run_all(const Options& opt) {
    std::vector<CriterionResult> out;
    std::vector<ConfirmedState> confirmed;

    const auto want = [&](int id) { return opt.only.empty() || opt.only.count(id) > 0; };
    // criteria 4 and 6 consume the states confirmed by 1-2
    const bool need_confirmed = want(1) || want(2) || want(4) || want(6) || want(14);

    if (need_confirmed) {
        auto c1 = criterion_exact_case(confirmed, opt.quick);
        if (want(1)) {
            out.push_back(std::move(c1));
        }
        auto c2 = criterion_approx_case(confirmed, opt.quick);
        if (want(2)) {
            out.push_back(std::move(c2));
        }
    }
    if (want(3)) {
        out.push_back(criterion_pseudospin_map(opt.quick));
    }
    if (want(4)) {
        out.push_back(criterion_wavefunctions(confirmed, opt.delta_perturbation));
    }
    if (want(5)) {
        out.push_back(criterion_normalization(opt.quick));
    }
    if (want(6)) {
        out.push_back(criterion_nu_engine(confirmed));
    }
    if (want(7)) {
        out.push_back(criterion_pekeris());
    }
    if (want(8)) {
        out.push_back(criterion_nonrel_limit());
    }
    if (want(9)) {
        out.push_back(criterion_oracle_selftests());
    }
    if (want(10)) {
        out.push_back(criterion_specfun());
    }
    if (want(11)) {
        out.push_back(criterion_pt_case());
    }
    if (want(12)) {
        out.push_back(info_published_coefficient_gap());
    }
    if (want(13)) {
        out.push_back(info_printed_branch_classification());
    }
    if (want(14)) {
        out.push_back(info_half_line_gap(confirmed));
    }
    return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results) {
        if (!r.informational && !r.passed) {
            return false;
        }
    }
    return true;
}

} // namespace rmdirac::validate
