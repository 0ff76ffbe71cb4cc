#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "rmdirac/model.hpp"
#include "rmdirac/pekeris.hpp"

namespace rmdirac::spectra {

/// Which printed energy equation the residual evaluates. SWave* require
/// |kappa| = 1; Eckart* are the sign-mapped s-wave forms.
enum class ResidualBranch {
    SpinGeneral,
    SpinExact, // exact spin symmetry, C_s = 0 everywhere
    Pseudospin,
    SWaveSpin,
    SWavePseudo,
    EckartSpin,
    EckartPseudo,
};

/// Root family selection. Normalizable places the quantized bracket at
/// delta - n (the decaying-solution family, confirmed by the eigensolver
/// oracle); AsPrinted uses the published n + delta + 1 placement, retained
/// so its roots can be classified against the oracle.
enum class Quantization { Normalizable, AsPrinted };

struct EnergyResidualSpec {
    ResidualBranch branch = ResidualBranch::SpinGeneral;
    PotentialParams params;
    PhysicalContext context;
    QuantumNumbers qn;
    pekeris::PekerisCoeffs coeffs;
    Quantization quantization = Quantization::Normalizable;
    bool pt_imaginary_v2 = false; // set by the PT case map

    void validate() const;
};

/// Energy-equation residual (LHS - RHS, units energy^2). nullopt signals an
/// out-of-domain trial energy (negative radical or empty bracket), distinct
/// from a signed value, so scans can skip.
std::optional<double> spin_residual(double E, const EnergyResidualSpec& s);
std::optional<double> pseudospin_residual(double E, const EnergyResidualSpec& s);

/// Dispatch over all branches, including the s-wave and Eckart forms.
std::optional<double> residual(double E, const EnergyResidualSpec& s);

/// Signed quantization function eps + eps_left + n - delta whose zeros are
/// exactly the normalizable levels. nullopt outside the domain.
std::optional<double> quantization_gap(double E, const EnergyResidualSpec& s);

enum class CaseMap { SpinToPseudospin, Eckart, PTSymmetric };

/// SpinToPseudospin: (V1, V2, C) -> -(V1, V2, C) with the branch flipped
/// (roots map as E -> -E). Eckart: (V1, V2) -> (-V1, -V2). PTSymmetric:
/// marks V2 imaginary for the complex evaluators.
EnergyResidualSpec apply_case_map(const EnergyResidualSpec& s, CaseMap map);

struct SearchWindow {
    double e_min = 0.0;
    double e_max = 0.0;
    int grid_points = 2000;

    void validate() const;
};

/// Bound-state window from the branch inequalities, inset by 1e-9 mc2.
SearchWindow default_window(const PotentialParams& p, const PhysicalContext& ctx);

/// Scan/bracket/bisect the quantization function (or, for AsPrinted, the
/// squared residual) over the window; filters eps > 0 and delta > 0; states
/// come back sorted by energy with eps, delta, left decay and the closed
/// form normalization attached. Empty result means no state in the window.
std::vector<BoundState> solve_bound_states(const EnergyResidualSpec& s, const SearchWindow& w);

/// Closed-form nonrelativistic level (omega = l(l+1)); mu is the reduced
/// mass in units consistent with hbar. Throws when no level n exists.
double nonrelativistic_energy(int n, int l, const PotentialParams& p, double mu,
                              const pekeris::PekerisCoeffs& coeffs, double hbar = 1.0,
                              Quantization q = Quantization::Normalizable);

/// Complex level of the PT-symmetric well (V2 entering as i V2); real V1 > 0.
std::complex<double> pt_energy_nonrel(int n, int l, const PotentialParams& p, double mu,
                                      const pekeris::PekerisCoeffs& coeffs, double hbar = 1.0);

/// Complex residual of the PT-symmetric spin equation at complex trial E;
/// principal square roots throughout. Evaluation only, no root search.
std::complex<double> pt_spin_residual(std::complex<double> E, const EnergyResidualSpec& s);

} // namespace rmdirac::spectra
