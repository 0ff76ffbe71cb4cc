#pragma once

#include <set>
#include <string>
#include <vector>

namespace rmdirac::validate {

struct Options {
    /// Fault-injection hook: fractional perturbation applied to the left
    /// decay exponent of the wavefunctions checked by the ODE-residual
    /// criterion. Nonzero values must make that criterion fail.
    double delta_perturbation = 0.0;
    /// Restrict the run to these criterion ids (empty = all).
    std::set<int> only;
    /// Smaller grids and fewer random draws; used by fast CLI checks.
    bool quick = false;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    bool informational = false; // reported, never fatal
    std::string detail;
};

std::vector<CriterionResult> run_all(const Options& opt = {});

/// True when every non-informational criterion passed.
bool all_passed(const std::vector<CriterionResult>& results);

} // namespace rmdirac::validate
