#include "triwell/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "triwell/json_io.hpp"
#include "triwell/su3.hpp"

namespace triwell {

namespace {

Matrix entries_from_pairs(const std::vector<double>& values, int rows) {
    Matrix m(rows, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j)
            m(i, j) = Complex(values[2 * (rows * i + j)], values[2 * (rows * i + j) + 1]);
    return m;
}

int with_output(const std::string& path, const std::function<void(std::ostream&)>& write) {
    if (path.empty()) {
        write(std::cout);
        return 0;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot open output path: " << path << '\n';
        return 3;
    }
    write(out);
    out.flush();
    if (!out.good()) {
        std::cerr << "failed writing to: " << path << '\n';
        return 3;
    }
    return 0;
}

struct SimulateConfig {
    bool optimal = false;
    bool identity = false;
    std::optional<double> theta2;
    std::vector<double> euler;
    std::vector<double> t_entries;
    std::vector<double> sigma_entries;
    std::string output;
};

int cmd_simulate(const SimulateConfig& cfg) {
    const int sources = (cfg.optimal ? 1 : 0) + (cfg.identity ? 1 : 0) +
                        (cfg.theta2 ? 1 : 0) + (cfg.euler.empty() ? 0 : 1) +
                        (cfg.t_entries.empty() ? 0 : 1);
    if (sources != 1) {
        std::cerr << "pick exactly one of --optimal, --identity, --theta2, --euler, --t\n";
        return 1;
    }

    std::optional<TunnelingMatrix> t;
    try {
        if (cfg.optimal)
            t = symmetric_matrix_entries(symmetric_solution(M_PI / 4.0));
        else if (cfg.identity)
            t = TunnelingMatrix::identity();
        else if (cfg.theta2)
            t = symmetric_matrix_entries(symmetric_solution(*cfg.theta2));
        else if (!cfg.euler.empty()) {
            EulerAngles angles;
            std::copy(cfg.euler.begin(), cfg.euler.end(), angles.theta.begin());
            t = euler_to_matrix(angles);
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    try {
        if (!cfg.t_entries.empty())
            t = TunnelingMatrix(entries_from_pairs(cfg.t_entries, 3));
        SpinFlip s = cfg.sigma_entries.empty()
                         ? SpinFlip::identity()
                         : SpinFlip(entries_from_pairs(cfg.sigma_entries, 2));
        ProtocolOutcome outcome = run_protocol(*t, s);
        return with_output(cfg.output,
                           [&](std::ostream& out) { dump_outcome_json(out, outcome); });
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
}

int cmd_sweep(int grid, const std::string& output, const std::string& format) {
    std::vector<double> grid_points = default_theta2_grid(grid);
    std::vector<CurvePoint> rows = probability_curves(grid_points);
    // Concurrence of the post-selected state from the eta differences; well
    // defined even where the detection probability underflows.
    std::vector<double> c3f(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EtaParams eta =
            EtaParams::of(symmetric_matrix_entries(symmetric_solution(rows[i].theta2)));
        c3f[i] = w_concurrence_closed_form(eta);
    }
    return with_output(output, [&](std::ostream& out) {
        if (format == "csv") {
            out << "theta2,cos_theta4,p_ab,p_bc,p_aa,p_bb,P,c3f\n";
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const CurvePoint& r = rows[i];
                out << format_double(r.theta2) << ',' << format_double(r.cos_theta4) << ','
                    << format_double(r.p_ab) << ',' << format_double(r.p_bc) << ','
                    << format_double(r.p_aa) << ',' << format_double(r.p_bb) << ','
                    << format_double(r.prob) << ',' << format_double(c3f[i]) << '\n';
            }
        } else {
            out << '[';
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const CurvePoint& r = rows[i];
                if (i != 0) out << ',';
                out << "{\"theta2\":" << format_double(r.theta2)
                    << ",\"cos_theta4\":" << format_double(r.cos_theta4)
                    << ",\"p_ab\":" << format_double(r.p_ab)
                    << ",\"p_bc\":" << format_double(r.p_bc)
                    << ",\"p_aa\":" << format_double(r.p_aa)
                    << ",\"p_bb\":" << format_double(r.p_bb)
                    << ",\"P\":" << format_double(r.prob)
                    << ",\"c3f\":" << format_double(c3f[i]) << '}';
            }
            out << "]\n";
        }
    });
}

int cmd_nogo(long samples, std::uint64_t seed, const std::string& output) {
    ScanReport report = ghz_no_go_scan(samples, seed);
    int rc = with_output(output, [&](std::ostream& out) { dump_scan_json(out, report); });
    if (rc != 0) return rc;
    if (!report.ok()) {
        std::cerr << "no-go scan found " << report.failures.size() << " violation(s)\n";
        return 4;
    }
    return 0;
}

int cmd_measures(const std::string& file, bool do_freeze, const std::string& output) {
    PureState state(3, 6);
    try {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot read state file: " + file);
        state = load_state_json(in).normalized();
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }

    MeasuresOutput mo;
    mo.n = state.n_particles();
    mo.d = state.dim_single();
    try {
        mo.measures.c_nf = fermionic_concurrence(state);
        if (mo.n == 3) mo.measures.tau_f = fermionic_tangle(to_slater_expansion(state));
        if (do_freeze) {
            mo.frozen = true;
            if (mo.n == 3) {
                mo.qubit_state = freeze(state);
                mo.identity = verify_measure_identity(state);
            } else {
                mo.qubit_state = freeze_pair(state);
                mo.measures.c2 = concurrence2(mo.qubit_state);
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    return with_output(output, [&](std::ostream& out) { dump_measures_json(out, mo); });
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Entanglement generation for indistinguishable fermions in tunnel-coupled wells"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value file mirroring the flags (flags win)");

    SimulateConfig sim_cfg;
    auto* sim = app.add_subcommand(
        "simulate", "run the three-well tunneling-plus-detection protocol once, print JSON");
    sim->add_flag("--optimal", sim_cfg.optimal,
                  "symmetric tunneling at theta2 = pi/4 (maximal detection probability)");
    sim->add_flag("--identity", sim_cfg.identity, "identity tunneling matrix");
    double theta2_value = 0.0;
    auto* theta2_opt = sim->add_option("--theta2", theta2_value,
                                       "symmetric equal-coefficient solution at this theta2");
    sim->add_option("--euler", sim_cfg.euler, "Euler angles theta1..theta8")
        ->expected(8)->delimiter(',');
    sim->add_option("--t", sim_cfg.t_entries,
                    "tunneling matrix, row-major re,im pairs (18 numbers)")
        ->expected(18)->delimiter(',');
    sim->add_option("--sigma", sim_cfg.sigma_entries,
                    "spin-flip matrix, row-major re,im pairs (8 numbers, default identity)")
        ->expected(8)->delimiter(',');
    sim->add_option("--output", sim_cfg.output, "output path (default stdout)");

    int grid = 2001;
    std::string sweep_output, sweep_format = "csv";
    auto* sweep = app.add_subcommand(
        "sweep", "probability and concurrence curves along the symmetric family");
    sweep->add_option("--grid", grid, "number of theta2 grid points")
        ->check(CLI::Range(2, 1000000));
    sweep->add_option("--output", sweep_output, "output path (default stdout)");
    sweep->add_option("--format", sweep_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    long samples = 10000;
    std::uint64_t seed = 0;
    std::string nogo_output;
    auto* nogo = app.add_subcommand(
        "nogo", "scan random and structured (T, Sigma) pairs for GHZ-type outcomes");
    nogo->add_option("--samples", samples, "number of Haar-random pairs")
        ->check(CLI::PositiveNumber);
    nogo->add_option("--seed", seed, "RNG seed");
    nogo->add_option("--output", nogo_output, "output path (default stdout)");

    std::string measures_file, measures_output;
    bool do_freeze = false;
    auto* measures = app.add_subcommand("measures", "entanglement measures of a state file");
    measures->add_option("file", measures_file, "state file (JSON)")->required();
    measures->add_flag("--freeze", do_freeze, "also map to distinguishable qubits and "
                                              "check the measure identity");
    measures->add_option("--output", measures_output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (theta2_opt->count() > 0) sim_cfg.theta2 = theta2_value;
    if (sim->parsed()) return cmd_simulate(sim_cfg);
    if (sweep->parsed()) return cmd_sweep(grid, sweep_output, sweep_format);
    if (nogo->parsed()) return cmd_nogo(samples, seed, nogo_output);
    if (measures->parsed()) return cmd_measures(measures_file, do_freeze, measures_output);
    return 1;
}

}  // namespace triwell
