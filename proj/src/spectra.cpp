#include "rmdirac/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rmdirac/detail/radial.hpp"

namespace rmdirac::spectra {

namespace {

constexpr double kWindowInset = 1e-9;

bool swave_branch(ResidualBranch b) {
    return b == ResidualBranch::SWaveSpin || b == ResidualBranch::SWavePseudo ||
           b == ResidualBranch::EckartSpin || b == ResidualBranch::EckartPseudo;
}

bool pseudospin_like(ResidualBranch b) {
    return b == ResidualBranch::Pseudospin || b == ResidualBranch::SWavePseudo ||
           b == ResidualBranch::EckartPseudo;
}

// quantized bracket position per family
double bracket_position(Quantization q, double delta, int n) {
    return (q == Quantization::Normalizable) ? delta - n : n + delta + 1.0;
}

// squared-bracket residual shared by every real branch
std::optional<double> squared_residual(double lhs, double omega_d0_term, double q_coeff,
                                       double delta, int n, double alpha, double h2,
                                       Quantization quant) {
    if (std::isnan(delta)) {
        return std::nullopt;
    }
    const double sigma = bracket_position(quant, delta, n);
    if (!(sigma > 0.0)) {
        return std::nullopt;
    }
    const double a2 = alpha * alpha;
    const double br = q_coeff / sigma - sigma;
    return lhs + omega_d0_term - a2 * h2 * br * br;
}

struct SWaveTerms {
    double lhs = 0.0;
    double w = 0.0; // bracket numerator, [w/sigma + sigma]^2 form
    double delta = 0.0;
};

// The four omega = 0 specializations share one algebraic skeleton; v1s/v2s
// carry the Eckart sign flips.
std::optional<SWaveTerms> swave_terms(double E, const EnergyResidualSpec& s) {
    const auto& p = s.params;
    const auto& ctx = s.context;
    const double h2 = ctx.hbarc * ctx.hbarc;
    const double a2 = p.alpha * p.alpha;
    const bool eckart =
        s.branch == ResidualBranch::EckartSpin || s.branch == ResidualBranch::EckartPseudo;
    const double v1 = eckart ? -p.v1 : p.v1;
    const double v2 = eckart ? -p.v2 : p.v2;
    SWaveTerms t;
    if (!pseudospin_like(s.branch)) {
        const double gamma = (ctx.mc2 + E - ctx.sym_const) / h2;
        t.lhs = (ctx.mc2 + E - ctx.sym_const) * (ctx.mc2 - E + v2);
        t.w = v2 * gamma / (2.0 * a2);
        const double rad = 1.0 + 4.0 * v1 * gamma / a2;
        if (rad < 0.0) {
            return std::nullopt;
        }
        t.delta = 0.5 * (-1.0 + std::sqrt(rad));
    } else {
        const double gamma = (ctx.mc2 - E + ctx.sym_const) / h2;
        t.lhs = (ctx.mc2 - E + ctx.sym_const) * (ctx.mc2 + E - v2);
        t.w = -v2 * gamma / (2.0 * a2);
        const double rad = 1.0 - 4.0 * v1 * gamma / a2;
        if (rad < 0.0) {
            return std::nullopt;
        }
        t.delta = 0.5 * (-1.0 + std::sqrt(rad));
    }
    return t;
}

std::optional<double> swave_residual(double E, const EnergyResidualSpec& s) {
    const auto t = swave_terms(E, s);
    if (!t) {
        return std::nullopt;
    }
    const double sigma = bracket_position(s.quantization, t->delta, s.qn.n);
    if (!(sigma > 0.0)) {
        return std::nullopt;
    }
    const double a2 = s.params.alpha * s.params.alpha;
    const double h2 = s.context.hbarc * s.context.hbarc;
    const double br = t->w / sigma + sigma;
    return t->lhs - a2 * h2 * br * br;
}

EnergyResidualSpec as_general(const EnergyResidualSpec& s) {
    EnergyResidualSpec g = s;
    if (s.branch == ResidualBranch::SpinExact) {
        g.branch = ResidualBranch::SpinGeneral;
        g.context.sym_const = 0.0;
    }
    return g;
}

} // namespace

void EnergyResidualSpec::validate() const {
    params.validate();
    context.validate();
    qn.validate();
    if (swave_branch(branch) && std::abs(qn.kappa) != 1) {
        throw std::invalid_argument("EnergyResidualSpec: s-wave branches require |kappa| = 1");
    }
    const bool pseudo = pseudospin_like(branch);
    if (pseudo && context.symmetry != Symmetry::Pseudospin) {
        throw std::invalid_argument("EnergyResidualSpec: pseudospin branch needs a "
                                    "pseudospin context");
    }
    if (!pseudo && context.symmetry != Symmetry::Spin) {
        throw std::invalid_argument("EnergyResidualSpec: spin branch needs a spin context");
    }
}

std::optional<double> spin_residual(double E, const EnergyResidualSpec& s) {
    const auto g = as_general(s);
    const auto& ctx = g.context;
    const double h2 = ctx.hbarc * ctx.hbarc;
    const auto t = detail::radial_terms(E, g.params, ctx, g.qn.kappa, g.coeffs);
    const double omega_d0 = t.omega * g.coeffs.d0 * h2 / (g.params.r_e * g.params.r_e);
    double q = t.q;
    if (g.quantization == Quantization::AsPrinted) {
        // published bracket numerator, opposite d1 orientation
        const double a2 = g.params.alpha * g.params.alpha;
        q = -g.params.v2 * t.gamma / (2.0 * a2) +
            t.omega * (g.coeffs.d1 + g.coeffs.d2) / (4.0 * a2 * g.params.r_e * g.params.r_e);
    }
    return squared_residual(t.lhs, omega_d0, q, t.delta, g.qn.n, g.params.alpha, h2,
                            g.quantization);
}

std::optional<double> pseudospin_residual(double E, const EnergyResidualSpec& s) {
    const auto& ctx = s.context;
    const double h2 = ctx.hbarc * ctx.hbarc;
    const auto t = detail::radial_terms(E, s.params, ctx, s.qn.kappa, s.coeffs);
    const double omega_d0 = t.omega * s.coeffs.d0 * h2 / (s.params.r_e * s.params.r_e);
    double q = t.q;
    if (s.quantization == Quantization::AsPrinted) {
        const double a2 = s.params.alpha * s.params.alpha;
        q = s.params.v2 * t.gamma / (2.0 * a2) +
            t.omega * (s.coeffs.d1 + s.coeffs.d2) / (4.0 * a2 * s.params.r_e * s.params.r_e);
    }
    return squared_residual(t.lhs, omega_d0, q, t.delta, s.qn.n, s.params.alpha, h2,
                            s.quantization);
}

std::optional<double> residual(double E, const EnergyResidualSpec& s) {
    switch (s.branch) {
    case ResidualBranch::SpinGeneral:
    case ResidualBranch::SpinExact:
        return spin_residual(E, s);
    case ResidualBranch::Pseudospin:
        return pseudospin_residual(E, s);
    case ResidualBranch::SWaveSpin:
    case ResidualBranch::SWavePseudo:
    case ResidualBranch::EckartSpin:
    case ResidualBranch::EckartPseudo:
        return swave_residual(E, s);
    }
    return std::nullopt;
}

std::optional<double> quantization_gap(double E, const EnergyResidualSpec& s) {
    const auto g = as_general(s);
    const bool eckart =
        s.branch == ResidualBranch::EckartSpin || s.branch == ResidualBranch::EckartPseudo;
    EnergyResidualSpec e = g;
    if (eckart) {
        e.params.v1 = -e.params.v1;
        e.params.v2 = -e.params.v2;
    }
    const auto t = detail::radial_terms(E, e.params, e.context, e.qn.kappa, e.coeffs);
    if (std::isnan(t.delta) || t.eps_sq < 0.0 || t.beta1 < 0.0) {
        return std::nullopt;
    }
    return std::sqrt(t.eps_sq) + std::sqrt(t.beta1) + e.qn.n - t.delta;
}

EnergyResidualSpec apply_case_map(const EnergyResidualSpec& s, CaseMap map) {
    EnergyResidualSpec out = s;
    switch (map) {
    case CaseMap::SpinToPseudospin:
        out.params.v1 = -s.params.v1;
        out.params.v2 = -s.params.v2;
        out.context.sym_const = -s.context.sym_const;
        out.context.symmetry =
            (s.context.symmetry == Symmetry::Spin) ? Symmetry::Pseudospin : Symmetry::Spin;
        // kappa -> -kappa keeps the centrifugal strength in the mapped slot:
        // kappa(kappa-1) of the original equals kappa'(kappa'+1) of the image
        out.qn.kappa = -s.qn.kappa;
        if (s.branch == ResidualBranch::SpinGeneral) {
            out.branch = ResidualBranch::Pseudospin;
        } else if (s.branch == ResidualBranch::Pseudospin) {
            out.branch = ResidualBranch::SpinGeneral;
        } else if (s.branch == ResidualBranch::SWaveSpin) {
            out.branch = ResidualBranch::SWavePseudo;
        } else if (s.branch == ResidualBranch::SWavePseudo) {
            out.branch = ResidualBranch::SWaveSpin;
        } else if (s.branch == ResidualBranch::EckartSpin) {
            out.branch = ResidualBranch::EckartPseudo;
        } else if (s.branch == ResidualBranch::EckartPseudo) {
            out.branch = ResidualBranch::EckartSpin;
        }
        break;
    case CaseMap::Eckart:
        out.params.v1 = -s.params.v1;
        out.params.v2 = -s.params.v2;
        break;
    case CaseMap::PTSymmetric:
        out.pt_imaginary_v2 = !s.pt_imaginary_v2;
        break;
    }
    return out;
}

void SearchWindow::validate() const {
    if (!(e_min < e_max)) {
        throw std::invalid_argument("SearchWindow: e_min must be below e_max");
    }
    if (grid_points < 100) {
        throw std::invalid_argument("SearchWindow: at least 100 grid points required");
    }
}

SearchWindow default_window(const PotentialParams& p, const PhysicalContext& ctx) {
    SearchWindow w;
    const double inset = kWindowInset * ctx.mc2;
    if (ctx.symmetry == Symmetry::Spin) {
        w.e_min = -ctx.mc2 + inset;
        w.e_max = ctx.mc2 + p.v2 - inset;
    } else {
        w.e_min = -ctx.mc2 + p.v2 + inset;
        w.e_max = ctx.mc2 - inset;
    }
    if (!(w.e_min < w.e_max)) {
        throw std::domain_error("default_window: branch inequalities leave no window");
    }
    return w;
}

namespace {

std::optional<double> eval_for_solve(double E, const EnergyResidualSpec& s) {
    return (s.quantization == Quantization::Normalizable) ? quantization_gap(E, s)
                                                          : residual(E, s);
}

// bisect on [a, b] where f has a sign change between valid values
double bisect(const EnergyResidualSpec& s, double a, double fa, double b, double tol) {
    for (int it = 0; it < 200 && (b - a) > tol; ++it) {
        const double m = 0.5 * (a + b);
        const auto fm = eval_for_solve(m, s);
        if (!fm) {
            // domain hole inside the bracket: shrink toward the valid side
            b = m;
            continue;
        }
        if ((fa <= 0.0) == (*fm <= 0.0)) {
            a = m;
            fa = *fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

} // namespace

std::vector<BoundState> solve_bound_states(const EnergyResidualSpec& s, const SearchWindow& w) {
    s.validate();
    w.validate();
    const double tol = 1e-12 * s.context.mc2;
    const int m = w.grid_points;
    std::vector<double> roots;

    double prev_e = w.e_min;
    std::optional<double> prev = eval_for_solve(prev_e, s);
    for (int i = 1; i < m; ++i) {
        const double e = w.e_min + (w.e_max - w.e_min) * i / (m - 1);
        std::optional<double> cur = eval_for_solve(e, s);
        if (prev && cur) {
            if ((*prev <= 0.0) != (*cur <= 0.0)) {
                roots.push_back(bisect(s, prev_e, *prev, e, tol));
            }
        } else if (prev.has_value() != cur.has_value()) {
            // domain boundary inside the cell: subdivide instead of bisecting blindly
            double a = prev_e, b = e;
            std::optional<double> fa = prev, fb = cur;
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (a + b);
                const auto fm = eval_for_solve(mid, s);
                if (fm.has_value() == fa.has_value()) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                    fb = fm;
                }
            }
            const auto edge = fa ? fa : fb;
            const double edge_e = fa ? a : b;
            const double other_e = fa ? prev_e : e;
            const auto other = fa ? prev : cur;
            if (edge && other && (*edge <= 0.0) != (*other <= 0.0)) {
                if (other_e < edge_e) {
                    roots.push_back(bisect(s, other_e, *other, edge_e, tol));
                } else {
                    roots.push_back(bisect(s, edge_e, *edge, other_e, tol));
                }
            }
        }
        prev = cur;
        prev_e = e;
    }

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [&](double a, double b) { return std::fabs(a - b) < 16.0 * tol; }),
                roots.end());

    std::vector<BoundState> states;
    const auto g = as_general(s);
    const bool eckart =
        s.branch == ResidualBranch::EckartSpin || s.branch == ResidualBranch::EckartPseudo;
    EnergyResidualSpec e = g;
    if (eckart) {
        e.params.v1 = -e.params.v1;
        e.params.v2 = -e.params.v2;
    }
    const bool pseudo = pseudospin_like(s.branch);
    for (double E : roots) {
        const auto t = detail::radial_terms(E, e.params, e.context, e.qn.kappa, e.coeffs);
        if (std::isnan(t.delta) || !(t.delta > 0.0) || !(t.eps_sq > 0.0)) {
            continue;
        }
        if (pseudo && e.context.sym_const == 0.0 &&
            std::fabs(E - e.context.mc2) < 1e-9 * e.context.mc2) {
            continue; // E = mc2 excluded under exact pseudospin symmetry
        }
        BoundState b;
        b.energy = E;
        b.epsilon = std::sqrt(t.eps_sq);
        b.delta = t.delta;
        b.decay_left = (t.beta1 >= 0.0) ? std::sqrt(t.beta1) : 0.0;
        b.qn = s.qn;
        b.branch = pseudo ? Symmetry::Pseudospin : Symmetry::Spin;
        if (s.quantization == Quantization::Normalizable && b.decay_left > 0.0) {
            b.norm = detail::bound_norm_closed(s.qn.n, b.epsilon, b.decay_left, e.params.alpha);
        }
        states.push_back(b);
    }
    return states;
}

double nonrelativistic_energy(int n, int l, const PotentialParams& p, double mu,
                              const pekeris::PekerisCoeffs& coeffs, double hbar,
                              Quantization q) {
    p.validate();
    if (n < 0 || l < 0) {
        throw std::invalid_argument("nonrelativistic_energy: n and l must be non-negative");
    }
    if (!(mu > 0.0) || !(hbar > 0.0)) {
        throw std::invalid_argument("nonrelativistic_energy: mu and hbar must be positive");
    }
    const double a2 = p.alpha * p.alpha;
    const double re2 = p.r_e * p.r_e;
    const double h2 = hbar * hbar;
    const double omega = static_cast<double>(l) * (l + 1);
    const double rad = 1.0 + 8.0 * mu * p.v1 / (a2 * h2) + omega * coeffs.d2 / (a2 * re2);
    if (rad < 0.0) {
        throw std::domain_error("nonrelativistic_energy: negative radical, no bound level");
    }
    const double dt0 = 0.5 * (-1.0 + std::sqrt(rad));
    const double sigma = bracket_position(q, dt0, n);
    if (!(sigma > 0.0)) {
        throw std::domain_error("nonrelativistic_energy: no bound level with n = " +
                                std::to_string(n));
    }
    const double qq = -mu * p.v2 / (a2 * h2) + omega * (coeffs.d2 - coeffs.d1) / (4.0 * a2 * re2);
    const double br = qq / sigma - sigma;
    return p.v2 + omega * coeffs.d0 * h2 / (2.0 * mu * re2) - h2 * a2 / (2.0 * mu) * br * br;
}

std::complex<double> pt_energy_nonrel(int n, int l, const PotentialParams& p, double mu,
                                      const pekeris::PekerisCoeffs& coeffs, double hbar) {
    p.validate();
    if (!(p.v1 > 0.0)) {
        throw std::domain_error("pt_energy_nonrel: requires real v1 > 0");
    }
    if (!(mu > 0.0) || !(hbar > 0.0)) {
        throw std::invalid_argument("pt_energy_nonrel: mu and hbar must be positive");
    }
    const double a2 = p.alpha * p.alpha;
    const double re2 = p.r_e * p.r_e;
    const double h2 = hbar * hbar;
    const double omega = static_cast<double>(l) * (l + 1);
    const double rad = 1.0 + 8.0 * mu * p.v1 / (a2 * h2) + omega * coeffs.d2 / (a2 * re2);
    if (rad < 0.0) {
        throw std::domain_error("pt_energy_nonrel: negative radical");
    }
    const double dt0 = 0.5 * (-1.0 + std::sqrt(rad));
    const double sigma = dt0 - n;
    if (!(sigma > 0.0)) {
        throw std::domain_error("pt_energy_nonrel: no bound level with n = " +
                                std::to_string(n));
    }
    const std::complex<double> iv2(0.0, p.v2);
    const std::complex<double> qq =
        -mu * iv2 / (a2 * h2) + omega * (coeffs.d2 - coeffs.d1) / (4.0 * a2 * re2);
    const std::complex<double> br = qq / sigma - sigma;
    return iv2 + omega * coeffs.d0 * h2 / (2.0 * mu * re2) - h2 * a2 / (2.0 * mu) * br * br;
}

std::complex<double> pt_spin_residual(std::complex<double> E, const EnergyResidualSpec& s) {
    const auto g = as_general(s);
    const auto& p = g.params;
    const auto& ctx = g.context;
    const double h2 = ctx.hbarc * ctx.hbarc;
    const double a2 = p.alpha * p.alpha;
    const double re2 = p.r_e * p.r_e;
    const double omega = static_cast<double>(g.qn.kappa) * (g.qn.kappa + 1);
    const std::complex<double> v2 =
        g.pt_imaginary_v2 ? std::complex<double>(0.0, p.v2) : std::complex<double>(p.v2, 0.0);
    const std::complex<double> gamma = (ctx.mc2 + E - ctx.sym_const) / h2;
    const std::complex<double> lhs = (ctx.mc2 + E - ctx.sym_const) * (ctx.mc2 - E + v2);
    const std::complex<double> eps_sq =
        (omega * g.coeffs.d0 / re2 + gamma * (ctx.mc2 - E + v2)) / (4.0 * a2);
    const std::complex<double> beta1 =
        (omega * (g.coeffs.d0 - g.coeffs.d1 + g.coeffs.d2) / re2 +
         gamma * (ctx.mc2 - E - v2)) /
        (4.0 * a2);
    const std::complex<double> rad = 1.0 + omega * g.coeffs.d2 / (a2 * re2) +
                                     4.0 * p.v1 * gamma / a2;
    const std::complex<double> delta = 0.5 * (-1.0 + std::sqrt(rad)); // principal branch
    const std::complex<double> sigma = delta - static_cast<double>(g.qn.n);
    const std::complex<double> q = beta1 - eps_sq;
    const std::complex<double> br = q / sigma - sigma;
    return lhs + omega * g.coeffs.d0 * h2 / re2 - a2 * h2 * br * br;
}

} // namespace rmdirac::spectra
