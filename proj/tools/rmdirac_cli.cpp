// Command-line front end: spectrum tables, wavefunction samples, Pekeris
// coefficient reports and the validation suite, with reproducible CSV/JSON
// output.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rmdirac/model.hpp"
#include "rmdirac/oracle.hpp"
#include "rmdirac/pekeris.hpp"
#include "rmdirac/spectra.hpp"
#include "rmdirac/validate.hpp"
#include "rmdirac/wavefun.hpp"

namespace {

using nlohmann::json;
using namespace rmdirac;

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitStateNotFound = 3;

struct RunConfig {
    std::string branch = "spin";
    double v1 = 3.0;
    double v2 = 1.0;
    double alpha = 0.5;
    double r_e = 1.0;
    double mc2 = 5.0;
    double hbarc = 1.0;
    double sym_const = 0.0;
    std::vector<int> kappa{-1};
    std::vector<int> n{0, 1, 2};
    std::string centrifugal = "pekeris";
    std::optional<double> e_min;
    std::optional<double> e_max;
    int grid_points = 2000;
    std::string format = "csv";
    std::string out;
    bool validate_rows = false;
    // wavefunction sampling grid
    double r_min = 0.0; // 0 -> default 1e-3/alpha
    double r_max = 0.0; // 0 -> decay-adapted
    int samples = 2001;
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(std::stoi(item));
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("empty integer list");
    }
    return out;
}

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "branch") {
        cfg.branch = value;
    } else if (key == "v1") {
        cfg.v1 = std::stod(value);
    } else if (key == "v2") {
        cfg.v2 = std::stod(value);
    } else if (key == "alpha") {
        cfg.alpha = std::stod(value);
    } else if (key == "r_e") {
        cfg.r_e = std::stod(value);
    } else if (key == "mc2") {
        cfg.mc2 = std::stod(value);
    } else if (key == "hbarc") {
        cfg.hbarc = std::stod(value);
    } else if (key == "sym_const") {
        cfg.sym_const = std::stod(value);
    } else if (key == "kappa") {
        cfg.kappa = parse_int_list(value);
    } else if (key == "n") {
        cfg.n = parse_int_list(value);
    } else if (key == "centrifugal") {
        cfg.centrifugal = value;
    } else if (key == "emin") {
        cfg.e_min = std::stod(value);
    } else if (key == "emax") {
        cfg.e_max = std::stod(value);
    } else if (key == "grid_points") {
        cfg.grid_points = std::stoi(value);
    } else if (key == "format") {
        cfg.format = value;
    } else if (key == "out") {
        cfg.out = value;
    } else if (key == "r_min") {
        cfg.r_min = std::stod(value);
    } else if (key == "r_max") {
        cfg.r_max = std::stod(value);
    } else if (key == "samples") {
        cfg.samples = std::stoi(value);
    } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

void load_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + path + "'");
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        const auto notspace = line.find_first_not_of(" \t\r\n");
        if (notspace == std::string::npos) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        " is not of the form key = value");
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r\n");
            const auto e = s.find_last_not_of(" \t\r\n");
            return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
        };
        apply_config_entry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

// ---- output ------------------------------------------------------------

struct Table {
    std::vector<std::string> columns;
    std::vector<json> rows; // objects keyed by column name
};

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string cell_to_string(const json& v) {
    if (v.is_number_float()) {
        return format_double(v.get<double>());
    }
    if (v.is_number_integer()) {
        return std::to_string(v.get<long long>());
    }
    if (v.is_boolean()) {
        return v.get<bool>() ? "true" : "false";
    }
    return v.get<std::string>();
}

void write_table(const Table& t, const RunConfig& cfg) {
    std::ostringstream os;
    if (cfg.format == "csv") {
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            os << (i ? "," : "") << t.columns[i];
        }
        os << "\n";
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < t.columns.size(); ++i) {
                os << (i ? "," : "") << cell_to_string(row.at(t.columns[i]));
            }
            os << "\n";
        }
    } else if (cfg.format == "json") {
        json doc = json::array();
        for (const auto& row : t.rows) {
            json ordered = json::object();
            for (const auto& c : t.columns) {
                ordered[c] = row.at(c);
            }
            doc.push_back(ordered);
        }
        os << doc.dump(2) << "\n";
    } else {
        throw std::invalid_argument("unknown output format '" + cfg.format + "'");
    }
    if (cfg.out.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(cfg.out);
        if (!f) {
            throw std::invalid_argument("cannot open output file '" + cfg.out + "'");
        }
        f << os.str();
    }
}

// ---- shared assembly -----------------------------------------------------

spectra::EnergyResidualSpec make_spec(const RunConfig& cfg, int kappa, int n) {
    spectra::EnergyResidualSpec s;
    if (cfg.branch == "spin") {
        s.branch = spectra::ResidualBranch::SpinGeneral;
        s.context.symmetry = Symmetry::Spin;
    } else if (cfg.branch == "pseudospin") {
        s.branch = spectra::ResidualBranch::Pseudospin;
        s.context.symmetry = Symmetry::Pseudospin;
    } else {
        throw std::invalid_argument("branch must be spin or pseudospin");
    }
    s.params = {cfg.v1, cfg.v2, cfg.alpha, cfg.r_e};
    s.context.mc2 = cfg.mc2;
    s.context.hbarc = cfg.hbarc;
    s.context.sym_const = cfg.sym_const;
    s.qn = {n, kappa};
    s.coeffs = pekeris::matched_coeffs(cfg.alpha, cfg.r_e);
    s.validate();
    return s;
}

spectra::SearchWindow make_window(const RunConfig& cfg, const spectra::EnergyResidualSpec& s) {
    auto w = spectra::default_window(s.params, s.context);
    if (cfg.e_min) {
        w.e_min = *cfg.e_min;
    }
    if (cfg.e_max) {
        w.e_max = *cfg.e_max;
    }
    w.grid_points = cfg.grid_points;
    w.validate();
    return w;
}

oracle::CentrifugalMode parse_mode(const RunConfig& cfg) {
    if (cfg.centrifugal == "exact") {
        return oracle::CentrifugalMode::Exact;
    }
    if (cfg.centrifugal == "pekeris") {
        return oracle::CentrifugalMode::Pekeris;
    }
    throw std::invalid_argument("centrifugal must be exact or pekeris");
}

// ---- subcommands ----------------------------------------------------------

int cmd_spectrum(const RunConfig& cfg) {
    const auto mode = parse_mode(cfg);
    struct RowTask {
        int kappa, n;
        std::future<std::vector<json>> fut;
    };
    std::vector<RowTask> tasks;
    for (int kappa : cfg.kappa) {
        for (int n : cfg.n) {
            auto work = [cfg, mode, kappa, n]() {
                std::vector<json> rows;
                auto s = make_spec(cfg, kappa, n);
                const auto w = make_window(cfg, s);
                for (const auto& b : spectra::solve_bound_states(s, w)) {
                    json row;
                    row["n"] = n;
                    row["kappa"] = kappa;
                    row["l"] = (cfg.branch == "spin") ? b.qn.l() : b.qn.l_tilde();
                    row["branch"] = cfg.branch;
                    row["energy"] = b.energy;
                    row["epsilon"] = b.epsilon;
                    row["delta"] = b.delta;
                    const auto res = spectra::residual(b.energy, s);
                    row["residual"] = res ? std::fabs(*res) : -1.0;
                    if (cfg.validate_rows) {
                        const double omega = (cfg.branch == "spin")
                                                 ? static_cast<double>(kappa) * (kappa + 1)
                                                 : static_cast<double>(kappa) * (kappa - 1);
                        oracle::OracleOptions opt;
                        opt.domain = (mode == oracle::CentrifugalMode::Exact && omega != 0.0)
                                         ? oracle::Domain::RadialHalfLine
                                         : oracle::Domain::ExtendedLine;
                        opt.target_energy = b.energy;
                        const double span = 0.3 * std::max(1.0, std::fabs(b.energy));
                        opt.e_min = b.energy - span;
                        opt.e_max = b.energy + span;
                        const double tol = 2e-4 * std::max(1.0, std::fabs(b.energy));
                        const auto o = oracle::self_consistent_energy(
                            n, s.params, s.context, s.qn, mode, s.coeffs, tol, opt);
                        row["oracle_energy"] = o.found ? o.energy : 0.0;
                        const double gap =
                            o.found ? std::fabs(o.energy - b.energy) /
                                          std::max(1e-300, std::fabs(b.energy))
                                    : -1.0;
                        row["oracle_rel_gap"] = gap;
                        row["confirmed"] = o.found && o.converged && gap >= 0.0 && gap < 1e-6;
                    }
                    rows.push_back(std::move(row));
                }
                return rows;
            };
            tasks.push_back({kappa, n, std::async(std::launch::async, work)});
        }
    }
    Table t;
    t.columns = {"n", "kappa", "l", "branch", "energy", "epsilon", "delta", "residual"};
    if (cfg.validate_rows) {
        t.columns.insert(t.columns.end(), {"oracle_energy", "oracle_rel_gap", "confirmed"});
    }
    std::vector<std::pair<std::pair<int, int>, std::vector<json>>> gathered;
    for (auto& task : tasks) {
        gathered.push_back({{task.kappa, task.n}, task.fut.get()});
    }
    std::sort(gathered.begin(), gathered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [key, rows] : gathered) {
        for (auto& row : rows) {
            t.rows.push_back(std::move(row));
        }
    }
    write_table(t, cfg);
    return kExitOk;
}

int cmd_wavefunction(const RunConfig& cfg) {
    if (cfg.kappa.size() != 1 || cfg.n.size() != 1) {
        throw std::invalid_argument("wavefunction wants exactly one kappa and one n");
    }
    auto s = make_spec(cfg, cfg.kappa.front(), cfg.n.front());
    const auto w = make_window(cfg, s);
    const auto states = spectra::solve_bound_states(s, w);
    if (states.empty()) {
        std::cerr << "no bound state for kappa=" << cfg.kappa.front() << " n=" << cfg.n.front()
                  << " in the window\n";
        return kExitStateNotFound;
    }
    const auto sol = wavefun::make_solution(states.back(), s.params, s.context, s.coeffs);
    const double a = cfg.alpha;
    const double r_lo = (cfg.r_min > 0.0) ? cfg.r_min : 1e-3 / a;
    const double r_hi = (cfg.r_max > r_lo)
                            ? cfg.r_max
                            : 0.5 / a * std::log(sol.state.decay_left / sol.state.epsilon) +
                                  (30.0 + 3.0 * sol.state.qn.n) /
                                      (2.0 * a * sol.state.epsilon) +
                                  3.0 / a;
    if (cfg.samples < 2) {
        throw std::invalid_argument("samples must be at least 2");
    }

    Table t;
    t.columns = {"r", "F", "G"};
    for (int i = 0; i < cfg.samples; ++i) {
        const double r = r_lo + (r_hi - r_lo) * i / (cfg.samples - 1);
        double F, G;
        if (s.context.symmetry == Symmetry::Spin) {
            F = wavefun::upper_spinor_f(r, sol);
            G = wavefun::lower_spinor_g_from_f(r, sol);
        } else {
            const auto pair = wavefun::pseudospin_pair(r, sol);
            F = pair.f;
            G = pair.g;
        }
        json row;
        row["r"] = r;
        row["F"] = F;
        row["G"] = G;
        t.rows.push_back(std::move(row));
    }
    write_table(t, cfg);
    return kExitOk;
}

int cmd_pekeris(const RunConfig& cfg) {
    Table t;
    t.columns = {"source", "d0",           "d1",           "d2",
                 "contact_value", "contact_first", "contact_second", "max_window_dev"};
    const auto window_dev = [&](const pekeris::PekerisCoeffs& c) {
        double worst = 0.0;
        for (int i = 0; i <= 2000; ++i) {
            const double r = 0.5 * cfg.r_e + 1.5 * cfg.r_e * i / 2000.0;
            const double approx = pekeris::centrifugal_approx(r, cfg.alpha, cfg.r_e, c);
            worst = std::max(worst, std::fabs(approx - 1.0 / (r * r)) * cfg.r_e * cfg.r_e);
        }
        return worst;
    };
    for (const auto& [name, coeffs] :
         {std::pair<std::string, pekeris::PekerisCoeffs>{
              "published", pekeris::published_coeffs(cfg.alpha, cfg.r_e)},
          {"contact_matched", pekeris::matched_coeffs(cfg.alpha, cfg.r_e)}}) {
        const auto res = pekeris::contact_residuals(cfg.alpha, cfg.r_e, coeffs);
        json row;
        row["source"] = name;
        row["d0"] = coeffs.d0;
        row["d1"] = coeffs.d1;
        row["d2"] = coeffs.d2;
        row["contact_value"] = res.value;
        row["contact_first"] = res.first;
        row["contact_second"] = res.second;
        row["max_window_dev"] = window_dev(coeffs);
        t.rows.push_back(std::move(row));
    }
    write_table(t, cfg);
    return kExitOk;
}

int cmd_validate(const RunConfig& cfg, const validate::Options& vopt) {
    const auto results = validate::run_all(vopt);
    Table t;
    t.columns = {"id", "name", "passed", "informational", "detail"};
    for (const auto& r : results) {
        json row;
        row["id"] = r.id;
        row["name"] = r.name;
        row["passed"] = r.passed;
        row["informational"] = r.informational;
        row["detail"] = r.detail;
        t.rows.push_back(std::move(row));
        std::cerr << (r.informational ? "[info] " : (r.passed ? "[pass] " : "[FAIL] "))
                  << "criterion " << r.id << ": " << r.name << " -- " << r.detail << "\n";
    }
    write_table(t, cfg);
    return validate::all_passed(results) ? kExitOk : kExitValidationFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirac Rosen-Morse bound states: analytic levels, spinor components and "
                 "an independent eigensolver cross-check"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    std::string kappa_list, n_list;
    validate::Options vopt;
    std::vector<int> only_ids;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "flat key = value configuration file");
        sub->add_option("--branch", cfg.branch, "spin or pseudospin");
        sub->add_option("--v1", cfg.v1, "well depth");
        sub->add_option("--v2", cfg.v2, "asymptotic shift");
        sub->add_option("--alpha", cfg.alpha, "potential range");
        sub->add_option("--re", cfg.r_e, "centrifugal reference radius");
        sub->add_option("--mc2", cfg.mc2, "rest energy");
        sub->add_option("--hbarc", cfg.hbarc, "hbar c in caller units");
        sub->add_option("--sym-const", cfg.sym_const, "C_s or C_ps");
        sub->add_option("--kappa", kappa_list, "comma-separated spin-orbit numbers");
        sub->add_option("--n", n_list, "comma-separated radial numbers");
        sub->add_option("--centrifugal", cfg.centrifugal, "exact or pekeris");
        sub->add_option("--emin", cfg.e_min, "window lower edge");
        sub->add_option("--emax", cfg.e_max, "window upper edge");
        sub->add_option("--grid-points", cfg.grid_points, "scan grid points");
        sub->add_option("--format", cfg.format, "csv or json");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
    };

    auto* spectrum = app.add_subcommand("spectrum", "bound-state table over (kappa, n)");
    add_common(spectrum);
    spectrum->add_flag("--validate", cfg.validate_rows, "attach oracle confirmation columns");

    auto* wavefunction = app.add_subcommand("wavefunction", "sample F and G for one state");
    add_common(wavefunction);
    wavefunction->add_option("--r-min", cfg.r_min, "first sample radius");
    wavefunction->add_option("--r-max", cfg.r_max, "last sample radius");
    wavefunction->add_option("--samples", cfg.samples, "number of samples");

    auto* pekeris_cmd = app.add_subcommand("pekeris", "centrifugal coefficient report");
    add_common(pekeris_cmd);

    auto* validate_cmd = app.add_subcommand("validate", "run the acceptance criteria");
    add_common(validate_cmd);
    validate_cmd->add_option("--only", only_ids, "restrict to these criterion ids");
    validate_cmd->add_flag("--quick", vopt.quick, "smaller grids and fewer draws");
    validate_cmd
        ->add_option("--inject-delta-perturbation", vopt.delta_perturbation,
                     "fault-injection hook for the wavefunction criterion")
        ->group(""); // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help
        }
        std::cerr << "argument error: " << e.what() << "\n";
        return kExitConfigError;
    }

    try {
        if (!config_path.empty()) {
            // flags win over the file: start from the file values, then copy
            // back every option the user passed explicitly
            RunConfig flags = cfg;
            RunConfig base;
            load_config_file(base, config_path);
            const CLI::App* sub = app.get_subcommands().front();
            const auto given = [&](const std::string& name) {
                const auto* o = sub->get_option_no_throw(name);
                return o != nullptr && o->count() > 0;
            };
            if (given("--branch")) base.branch = flags.branch;
            if (given("--v1")) base.v1 = flags.v1;
            if (given("--v2")) base.v2 = flags.v2;
            if (given("--alpha")) base.alpha = flags.alpha;
            if (given("--re")) base.r_e = flags.r_e;
            if (given("--mc2")) base.mc2 = flags.mc2;
            if (given("--hbarc")) base.hbarc = flags.hbarc;
            if (given("--sym-const")) base.sym_const = flags.sym_const;
            if (given("--centrifugal")) base.centrifugal = flags.centrifugal;
            if (given("--emin")) base.e_min = flags.e_min;
            if (given("--emax")) base.e_max = flags.e_max;
            if (given("--grid-points")) base.grid_points = flags.grid_points;
            if (given("--format")) base.format = flags.format;
            if (given("--out")) base.out = flags.out;
            if (given("--r-min")) base.r_min = flags.r_min;
            if (given("--r-max")) base.r_max = flags.r_max;
            if (given("--samples")) base.samples = flags.samples;
            base.validate_rows = flags.validate_rows || base.validate_rows;
            cfg = base;
        }
        if (!kappa_list.empty()) {
            cfg.kappa = parse_int_list(kappa_list);
        }
        if (!n_list.empty()) {
            cfg.n = parse_int_list(n_list);
        }
        for (int id : only_ids) {
            vopt.only.insert(id);
        }

        if (spectrum->parsed()) {
            return cmd_spectrum(cfg);
        }
        if (wavefunction->parsed()) {
            return cmd_wavefunction(cfg);
        }
        if (pekeris_cmd->parsed()) {
            return cmd_pekeris(cfg);
        }
        if (validate_cmd->parsed()) {
            return cmd_validate(cfg, vopt);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitConfigError;
}
