#include "rmdirac/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rmdirac/detail/radial.hpp"

namespace rmdirac::oracle {

namespace {

// Rosen-Morse shape valid for every real r (model::rosen_morse is the
// radial-domain entry point).
double well(double r, const PotentialParams& p) {
    const double c = std::cosh(p.alpha * r);
    return -p.v1 / (c * c) + p.v2 * std::tanh(p.alpha * r);
}

// eigenvalue count below x for the tridiagonal (d_i diagonal, e off-diagonal),
// Sturm sequence with a pivot guard against exact zeros
int sturm_count(const std::vector<double>& d, double e2, double x) {
    int count = 0;
    double q = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        q = (i == 0) ? d[0] - x : d[i] - x - e2 / q;
        if (q == 0.0) {
            q = -1e-300;
        }
        if (q < 0.0) {
            ++count;
        }
    }
    return count;
}

double sturm_eigenvalue(const std::vector<double>& d, double e2, int index) {
    const double e_abs = std::sqrt(e2);
    double lo = d[0], hi = d[0];
    for (double di : d) {
        lo = std::min(lo, di - 2.0 * e_abs);
        hi = std::max(hi, di + 2.0 * e_abs);
    }
    for (int it = 0; it < 120 && (hi - lo) > 1e-14 * std::max(1.0, std::fabs(lo) + std::fabs(hi));
         ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(d, e2, mid) > index) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

void GridSpec::validate() const {
    if (!(r_min < r_max)) {
        throw std::invalid_argument("GridSpec: r_min must be below r_max");
    }
    if (points < 200) {
        throw std::invalid_argument("GridSpec: at least 200 points required");
    }
}

EffectiveProblem effective_problem(double E, const PotentialParams& p,
                                   const PhysicalContext& ctx, const QuantumNumbers& qn,
                                   CentrifugalMode mode, const pekeris::PekerisCoeffs& coeffs) {
    p.validate();
    ctx.validate();
    qn.validate();
    const double h2 = ctx.hbarc * ctx.hbarc;
    EffectiveProblem out;
    if (ctx.symmetry == Symmetry::Spin) {
        const double omega = static_cast<double>(qn.kappa) * (qn.kappa + 1);
        const double gamma = (ctx.mc2 + E - ctx.sym_const) / h2;
        out.target = (E * E - ctx.mc2 * ctx.mc2 + ctx.sym_const * (ctx.mc2 - E)) / h2;
        out.u_eff = [=, params = p](double r) {
            const double cent =
                (omega == 0.0) ? 0.0
                : (mode == CentrifugalMode::Exact)
                    ? omega / (r * r)
                    : omega * pekeris::centrifugal_approx(r, params.alpha, params.r_e, coeffs);
            return cent + gamma * well(r, params);
        };
    } else {
        const double omega = static_cast<double>(qn.kappa) * (qn.kappa - 1);
        const double gamma = (ctx.mc2 - E + ctx.sym_const) / h2;
        out.target = (E * E - ctx.mc2 * ctx.mc2 - ctx.sym_const * (ctx.mc2 + E)) / h2;
        out.u_eff = [=, params = p](double r) {
            const double cent =
                (omega == 0.0) ? 0.0
                : (mode == CentrifugalMode::Exact)
                    ? omega / (r * r)
                    : omega * pekeris::centrifugal_approx(r, params.alpha, params.r_e, coeffs);
            return cent - gamma * well(r, params);
        };
    }
    return out;
}

std::vector<double> eigenvalues_fd(const std::function<double(double)>& u_eff,
                                   const GridSpec& grid, int count) {
    grid.validate();
    if (count < 1 || count > grid.points - 2) {
        throw std::invalid_argument("eigenvalues_fd: count exceeds grid capacity");
    }
    const int N = grid.points;
    const double h = (grid.r_max - grid.r_min) / (N - 1);
    std::vector<double> d(N - 2);
    for (int i = 1; i <= N - 2; ++i) {
        const double r = grid.r_min + i * h;
        d[i - 1] = 2.0 / (h * h) + u_eff(r);
    }
    const double e2 = 1.0 / (h * h) * (1.0 / (h * h));
    std::vector<double> out(count);
    for (int k = 0; k < count; ++k) {
        out[k] = sturm_eigenvalue(d, e2, k);
    }
    return out;
}

namespace {

// phi(E) = lambda_n(E) - target(E); bracket on a scan grid and bisect.
std::vector<double> phi_roots(const std::function<double(double)>& phi, double e_min,
                              double e_max, int scan_points, double tol) {
    std::vector<double> roots;
    double prev_e = e_min;
    double prev = phi(prev_e);
    for (int i = 1; i < scan_points; ++i) {
        const double e = e_min + (e_max - e_min) * i / (scan_points - 1);
        const double cur = phi(e);
        if (std::isfinite(prev) && std::isfinite(cur) && (prev <= 0.0) != (cur <= 0.0)) {
            double a = prev_e, b = e, fa = prev;
            for (int it = 0; it < 200 && (b - a) > tol; ++it) {
                const double m = 0.5 * (a + b);
                const double fm = phi(m);
                if ((fa <= 0.0) == (fm <= 0.0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        prev = cur;
        prev_e = e;
    }
    return roots;
}

double eigen_on_grid(const EffectiveProblem& prob, const GridSpec& grid, int n) {
    const int N = grid.points;
    const double h = (grid.r_max - grid.r_min) / (N - 1);
    std::vector<double> d(N - 2);
    for (int i = 1; i <= N - 2; ++i) {
        d[i - 1] = 2.0 / (h * h) + prob.u_eff(grid.r_min + i * h);
    }
    return sturm_eigenvalue(d, 1.0 / (h * h) / (h * h), n);
}

struct GenericSelfConsistent {
    std::function<EffectiveProblem(double)> problem_at;
    double e_min = 0.0;
    double e_max = 0.0;
};

OracleResult run_self_consistent(const GenericSelfConsistent& sc, int n, const GridSpec& base,
                                 double tol, const OracleOptions& opt) {
    OracleResult res;
    res.eigen_index = n;
    res.grid = base;

    GridSpec fine = base;
    fine.points = 2 * base.points;

    // inner roots are resolved to machine precision so the Richardson pair
    // reflects pure discretization error; tol only gates `converged`
    const double bisect_tol =
        1e-13 * std::max(1.0, std::max(std::fabs(sc.e_min), std::fabs(sc.e_max)));

    const auto phi = [&](const GridSpec& g) {
        return [&sc, g, n](double E) {
            const auto prob = sc.problem_at(E);
            return eigen_on_grid(prob, g, n) - prob.target;
        };
    };

    const auto base_roots = phi_roots(phi(base), sc.e_min, sc.e_max, opt.scan_points, bisect_tol);
    if (base_roots.empty()) {
        return res; // no oracle state in the window
    }
    double e_base = base_roots.front();
    if (opt.target_energy) {
        for (double r : base_roots) {
            if (std::fabs(r - *opt.target_energy) < std::fabs(e_base - *opt.target_energy)) {
                e_base = r;
            }
        }
    }

    // refine the chosen root on the fine grid inside a narrow bracket
    const double span = std::max(64.0 * tol, 1e-3 * (sc.e_max - sc.e_min));
    const double lo = std::max(sc.e_min, e_base - span);
    const double hi = std::min(sc.e_max, e_base + span);
    const auto fine_roots = phi_roots(phi(fine), lo, hi, 33, bisect_tol);
    if (fine_roots.empty()) {
        return res;
    }
    double e_fine = fine_roots.front();
    for (double r : fine_roots) {
        if (std::fabs(r - e_base) < std::fabs(e_fine - e_base)) {
            e_fine = r;
        }
    }

    res.found = true;
    res.energy = e_fine + (e_fine - e_base) / 3.0; // Richardson, O(h^2) pair
    res.richardson_error = std::fabs(e_fine - e_base) / 3.0;

    // continuum guard: a genuine bound eigenvalue sits below the potential
    // floor at the grid ends
    const auto prob = sc.problem_at(res.energy);
    const double lambda = eigen_on_grid(prob, fine, n);
    const double edge = std::min(prob.u_eff(base.r_min), prob.u_eff(base.r_max));
    const double margin = 1e-7 * std::max(1.0, std::fabs(edge));
    res.converged = res.richardson_error <= tol && lambda < edge - margin;
    return res;
}

} // namespace

OracleResult self_consistent_energy(int n, const PotentialParams& p, const PhysicalContext& ctx,
                                    const QuantumNumbers& qn, CentrifugalMode mode,
                                    const pekeris::PekerisCoeffs& coeffs, double tol,
                                    const OracleOptions& opt) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("self_consistent_energy: tol must be positive");
    }
    if (n < 0) {
        throw std::invalid_argument("self_consistent_energy: n must be non-negative");
    }
    if (opt.domain == Domain::ExtendedLine && mode == CentrifugalMode::Exact &&
        qn.kappa * (qn.kappa + (ctx.symmetry == Symmetry::Spin ? 1 : -1)) != 0) {
        throw std::invalid_argument("self_consistent_energy: exact centrifugal term is "
                                    "singular inside the extended domain; use Pekeris mode");
    }

    GenericSelfConsistent sc;
    // decay-adapted extent from the window-midpoint estimate
    double e_lo, e_hi;
    if (ctx.symmetry == Symmetry::Spin) {
        e_lo = -ctx.mc2 + 1e-9 * ctx.mc2;
        e_hi = ctx.mc2 + p.v2 - 1e-9 * ctx.mc2;
    } else {
        e_lo = -ctx.mc2 + p.v2 + 1e-9 * ctx.mc2;
        e_hi = ctx.mc2 - 1e-9 * ctx.mc2;
    }
    if (opt.e_min) {
        e_lo = *opt.e_min;
    }
    if (opt.e_max) {
        e_hi = *opt.e_max;
    }
    if (!(e_lo < e_hi)) {
        throw std::invalid_argument("self_consistent_energy: empty energy window");
    }
    sc.e_min = e_lo;
    sc.e_max = e_hi;

    const double e_mid = opt.target_energy.value_or(0.5 * (e_lo + e_hi));
    const auto t_mid = detail::radial_terms(e_mid, p, ctx, qn.kappa, coeffs);
    const double eps_est = (t_mid.eps_sq > 0.09) ? std::sqrt(t_mid.eps_sq) : 0.3;
    const double epsl_est = (t_mid.beta1 > 0.09) ? std::sqrt(t_mid.beta1) : 0.3;

    GridSpec grid;
    grid.points = opt.base_points;
    if (opt.domain == Domain::RadialHalfLine) {
        grid.r_min = 1e-4 / p.alpha;
        grid.r_max = 30.0 / p.alpha + 10.0 / (p.alpha * eps_est);
    } else {
        grid.r_min = -(30.0 / p.alpha + 10.0 / (p.alpha * epsl_est));
        grid.r_max = 30.0 / p.alpha + 10.0 / (p.alpha * eps_est);
    }

    sc.problem_at = [=, params = p, context = ctx, numbers = qn, cc = coeffs](double E) {
        return effective_problem(E, params, context, numbers, mode, cc);
    };
    return run_self_consistent(sc, n, grid, tol, opt);
}

OracleResult self_consistent_nonrel(int n, int l, const PotentialParams& p, double mu,
                                    CentrifugalMode mode, const pekeris::PekerisCoeffs& coeffs,
                                    double tol, double hbar, const OracleOptions& opt) {
    if (!(tol > 0.0) || !(mu > 0.0) || !(hbar > 0.0)) {
        throw std::invalid_argument("self_consistent_nonrel: tol, mu, hbar must be positive");
    }
    const double two_mu = 2.0 * mu / (hbar * hbar);
    const double omega = static_cast<double>(l) * (l + 1);
    if (opt.domain == Domain::ExtendedLine && mode == CentrifugalMode::Exact && omega != 0.0) {
        throw std::invalid_argument("self_consistent_nonrel: exact centrifugal term is "
                                    "singular inside the extended domain; use Pekeris mode");
    }

    GenericSelfConsistent sc;
    const double depth = std::fabs(p.v1) + std::fabs(p.v2);
    sc.e_min = opt.e_min.value_or(-2.0 * depth - 1.0);
    sc.e_max = opt.e_max.value_or(p.v2 - 1e-9 * std::max(1.0, depth));
    if (!(sc.e_min < sc.e_max)) {
        throw std::invalid_argument("self_consistent_nonrel: empty energy window");
    }

    GridSpec grid;
    grid.points = opt.base_points;
    const double ext = 30.0 / p.alpha + 20.0 / p.alpha;
    if (opt.domain == Domain::RadialHalfLine) {
        grid.r_min = 1e-4 / p.alpha;
        grid.r_max = ext;
    } else {
        grid.r_min = -ext;
        grid.r_max = ext;
    }

    sc.problem_at = [=, params = p, cc = coeffs](double E) {
        EffectiveProblem prob;
        prob.target = two_mu * E;
        prob.u_eff = [=](double r) {
            const double cent =
                (omega == 0.0) ? 0.0
                : (mode == CentrifugalMode::Exact)
                    ? omega / (r * r)
                    : omega * pekeris::centrifugal_approx(r, params.alpha, params.r_e, cc);
            return cent + two_mu * well(r, params);
        };
        return prob;
    };
    return run_self_consistent(sc, n, grid, tol, opt);
}

} // namespace rmdirac::oracle
