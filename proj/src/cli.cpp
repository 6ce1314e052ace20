#include "gasnet/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gasnet/feasibility.hpp"
#include "gasnet/io.hpp"
#include "gasnet/reference.hpp"

namespace gasnet::cli {

using nlohmann::json;

namespace {

// Thrown after a diagnostic has been printed; carries the exit code.
struct Exit {
    int code;
};

Network load_network(const std::string& path, std::ostream& err) {
    NetworkDescription description;
    try {
        description = read_network(path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        throw Exit{io_error};
    }
    auto result = validate(description);
    if (!result.ok()) {
        for (const auto& v : result.violations) err << to_string(v.kind) << ": " << v.message << '\n';
        throw Exit{invalid_network};
    }
    return std::move(*result.network);
}

void emit(const RunManifest& m, std::ostream& out, const std::string& text) {
    if (m.output) {
        write_text(*m.output, text);
    } else {
        out << text;
    }
}

SolveResult oracle_solve(const Network& network, const SolverConfig& cfg) {
    const auto oracle = network.edge_count() + 1 == network.junction_count() ? tree_solve(network) : cycle_bisect(network);
    SolveResult result;
    result.state = oracle.state;
    const auto f = assemble_residual(network, result.state, 1.0);
    result.residual_norm = f.size() ? f.cwiseAbs().maxCoeff() : 0.0;
    result.status = result.residual_norm <= cfg.tol ? SolveStatus::converged : SolveStatus::newton_diverged;
    result.trace.push_back({1.0, 0, result.residual_norm, FailureCause::none});
    return result;
}

SolveResult run_solver(const RunManifest& m, const Network& network, std::ostream& err) {
    if (m.method == "oracle") {
        try {
            return oracle_solve(network, m.solver);
        } catch (const OracleError& e) {
            err << "error: " << e.what() << '\n';
            throw Exit{solver_failure};
        }
    }
    const auto method = m.method == "newton"     ? SolveMethod::newton
                        : m.method == "homotopy" ? SolveMethod::homotopy
                                                 : SolveMethod::automatic;
    return solve(network, method, m.solver);
}

int run_validate(const RunManifest& m, std::ostream& out, std::ostream& err) {
    NetworkDescription description;
    try {
        description = read_network(m.input);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return io_error;
    }
    const auto result = validate(description);
    json doc{{"valid", result.ok()}};
    if (result.ok()) {
        doc["junctions"] = result.network->junction_count();
        doc["pipes"] = result.network->pipe_count();
        doc["compressors"] = result.network->compressor_count();
    } else {
        doc["violations"] = violations_to_json(result.violations);
        for (const auto& v : result.violations) err << to_string(v.kind) << ": " << v.message << '\n';
    }
    emit(m, out, doc.dump(2) + "\n");
    return result.ok() ? ok : invalid_network;
}

int run_bounds(const RunManifest& m, std::ostream& out, std::ostream& err) {
    const auto network = load_network(m.input, err);
    const auto b = compute_bounds(network, m.bounds_mode);
    if (m.json) {
        emit(m, out, bounds_to_json(b).dump(2) + "\n");
        return ok;
    }
    std::ostringstream table;
    table.precision(17);
    table << "mode    " << to_string(b.mode) << '\n'
          << "beta_m  " << b.beta_m << '\n'
          << "alpha_m " << b.alpha_m << '\n'
          << "gamma_m " << b.gamma_m << '\n'
          << "phi_m   " << b.phi_m << '\n'
          << "pi_m    " << b.pi_m << '\n'
          << "L       " << b.half_width << '\n';
    emit(m, out, table.str());
    return ok;
}

void write_side_outputs(const RunManifest& m, const Network& network, const SolveResult& result) {
    if (m.trace_output) {
        std::ostringstream csv;
        write_trace_csv(csv, result.trace);
        write_text(*m.trace_output, csv.str());
    }
    if (m.jacobian_output && static_cast<std::size_t>(result.state.size()) == ordering(network).size()) {
        std::ostringstream csv;
        write_jacobian_csv(csv, assemble_jacobian(network, result.state, 1.0, m.solver.eps));
        write_text(*m.jacobian_output, csv.str());
    }
}

int run_solve(const RunManifest& m, std::ostream& out, std::ostream& err) {
    const auto network = load_network(m.input, err);
    const auto result = run_solver(m, network, err);
    write_side_outputs(m, network, result);

    if (!result.has_solution()) {
        err << "solver failed: " << to_string(result.status) << " (residual " << result.residual_norm << ")\n";
        emit(m, out, solution_to_json(network, result).dump(2) + "\n");
        return solver_failure;
    }

    const auto report = classify(network, result.state);
    auto doc = solution_to_json(network, result, &report);
    if (m.probe_trials > 0) {
        const auto probe = uniqueness_probe(network, m.solver, m.probe_trials, m.seed);
        doc["uniqueness"] = {{"trials", probe.trials.size()},
                             {"converged", probe.converged_count()},
                             {"distinct", probe.distinct_states.size()}};
    }
    emit(m, out, doc.dump(2) + "\n");

    if (result.status == SolveStatus::boundary_violation) {
        err << "solution left the a-priori hypercube (" << result.bound_excursions << " accepted states)\n";
        return solver_failure;
    }
    for (const auto& reason : report.reasons) err << reason << '\n';
    return report.overall == Feasibility::feasible ? ok : infeasible;
}

int run_feasibility(const RunManifest& m, std::ostream& out, std::ostream& err) {
    const auto network = load_network(m.input, err);
    StateVector state;
    if (m.solve_first) {
        const auto result = run_solver(m, network, err);
        if (!result.has_solution()) {
            err << "solver failed: " << to_string(result.status) << '\n';
            return solver_failure;
        }
        state = result.state;
    } else if (m.solution_input) {
        try {
            state = state_from_solution_json(network, read_json(*m.solution_input));
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            return io_error;
        }
    } else {
        err << "error: feasibility needs --solution FILE or --solve\n";
        return io_error;
    }

    const auto report = classify(network, state);
    emit(m, out, report_to_json(network, report).dump(2) + "\n");
    err << "overall: " << to_string(report.overall) << '\n';
    for (const auto& reason : report.reasons) err << "  " << reason << '\n';
    return report.overall == Feasibility::feasible ? ok : infeasible;
}

int run_alpha_error(const RunManifest& m, std::ostream& out, std::ostream& err) {
    SweepTable table;
    try {
        table = alpha_error_sweep(m.sweep_eos, m.sweep);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return io_error;
    }
    std::ostringstream csv;
    write_sweep_csv(csv, table);
    emit(m, out, csv.str());
    err << "max |alpha_cnga - alpha| = " << table.max_abs_err << " at p = " << table.argmax_p
        << " MPa, alpha = " << table.argmax_alpha << " (relative " << table.max_rel_err << ")\n";
    return ok;
}

int run_generate(const RunManifest& m, std::ostream& out, std::ostream& err) {
    NetworkDescription net;
    try {
        net = generate_network(m.generator, m.seed);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return io_error;
    }
    emit(m, out, network_to_json(net).dump(2) + "\n");
    return ok;
}

void add_solver_options(CLI::App* cmd, RunManifest& m) {
    cmd->add_option("--method", m.method, "auto | newton | homotopy | oracle")
        ->check(CLI::IsMember({"auto", "newton", "homotopy", "oracle"}));
    cmd->add_option("--tol", m.solver.tol, "residual infinity-norm tolerance");
    cmd->add_option("--ds-init", m.solver.ds_init, "initial homotopy step");
    cmd->add_option("--ds-min", m.solver.ds_min, "smallest homotopy step before giving up");
    cmd->add_option("--max-iters", m.solver.max_newton_iters, "Newton iterations per solve");
}

}  // namespace

int execute(const RunManifest& m, std::ostream& out, std::ostream& err) {
    try {
        m.solver.validate();
        switch (m.command) {
            case Command::validate: return run_validate(m, out, err);
            case Command::bounds: return run_bounds(m, out, err);
            case Command::solve: return run_solve(m, out, err);
            case Command::feasibility: return run_feasibility(m, out, err);
            case Command::alpha_error: return run_alpha_error(m, out, err);
            case Command::generate: return run_generate(m, out, err);
        }
    } catch (const Exit& e) {
        return e.code;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return io_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return io_error;
    }
    return io_error;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunManifest m;
    CLI::App app{"Steady-state potential-flow network solver"};
    app.require_subcommand(1);

    auto* validate_cmd = app.add_subcommand("validate", "check a network file against the admissibility rules");
    validate_cmd->add_option("network", m.input, "network JSON")->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "a-priori hypercube containing the solution");
    bounds_cmd->add_option("network", m.input, "network JSON")->required();
    std::string mode = "safe";
    bounds_cmd->add_option("--mode", mode, "paper | safe")->check(CLI::IsMember({"paper", "safe"}));
    bounds_cmd->add_flag("--json", m.json, "print JSON instead of a table");

    auto* solve_cmd = app.add_subcommand("solve", "solve for flows and potentials, then classify feasibility");
    solve_cmd->add_option("network", m.input, "network JSON")->required();
    add_solver_options(solve_cmd, m);
    solve_cmd->add_option("--seed", m.seed, "seed for --probe starts");
    solve_cmd->add_option("--probe", m.probe_trials, "random-start Newton trials for the uniqueness probe");
    solve_cmd->add_option("--trace", m.trace_output, "write the continuation trace as CSV");
    solve_cmd->add_option("--dump-jacobian", m.jacobian_output, "write the final Jacobian as row,col,value CSV");

    auto* feas_cmd = app.add_subcommand("feasibility", "classify a solution as feasible or infeasible");
    feas_cmd->add_option("network", m.input, "network JSON")->required();
    auto* sol_opt = feas_cmd->add_option("--solution", m.solution_input, "solution JSON from `solve`");
    feas_cmd->add_flag("--solve", m.solve_first, "solve the network first")->excludes(sol_opt);
    add_solver_options(feas_cmd, m);

    auto* alpha_cmd = app.add_subcommand("alpha-error", "compare the CNGA effective compressor ratio with alpha");
    alpha_cmd->add_option("--p-min", m.sweep.p_min, "smallest inlet pressure (MPa)");
    alpha_cmd->add_option("--p-max", m.sweep.p_max, "largest inlet pressure (MPa)");
    alpha_cmd->add_option("--alpha-min", m.sweep.alpha_min);
    alpha_cmd->add_option("--alpha-max", m.sweep.alpha_max);
    alpha_cmd->add_option("--p-count", m.sweep.p_count);
    alpha_cmd->add_option("--alpha-count", m.sweep.alpha_count);
    double b1 = m.sweep_eos.b1;
    double b2 = m.sweep_eos.b2;
    alpha_cmd->add_option("--b1", b1);
    alpha_cmd->add_option("--b2", b2, "per MPa");

    auto* gen_cmd = app.add_subcommand("generate", "write a random admissible network");
    std::string topology = "tree";
    std::string eos = "ideal";
    gen_cmd->add_option("--topology", topology)->check(CLI::IsMember({"tree", "mesh", "cycle"}));
    gen_cmd->add_option("--nodes", m.generator.nodes);
    gen_cmd->add_option("--slacks", m.generator.slack_count);
    gen_cmd->add_option("--compressor-fraction", m.generator.compressor_fraction);
    gen_cmd->add_option("--eos", eos)->check(CLI::IsMember({"ideal", "cnga"}));
    gen_cmd->add_option("--seed", m.seed);

    for (auto* cmd : {validate_cmd, bounds_cmd, solve_cmd, feas_cmd, alpha_cmd, gen_cmd}) {
        cmd->add_option("-o,--out", m.output, "write the result here instead of standard output");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : io_error;
    }

    if (validate_cmd->parsed()) m.command = Command::validate;
    if (bounds_cmd->parsed()) m.command = Command::bounds;
    if (solve_cmd->parsed()) m.command = Command::solve;
    if (feas_cmd->parsed()) m.command = Command::feasibility;
    if (alpha_cmd->parsed()) m.command = Command::alpha_error;
    if (gen_cmd->parsed()) m.command = Command::generate;

    m.bounds_mode = mode == "paper" ? BoundsMode::paper : BoundsMode::safe;
    m.generator.topology = topology == "mesh" ? Topology::mesh : topology == "cycle" ? Topology::cycle : Topology::tree;
    m.generator.eos = eos == "cnga" ? EosKind::cnga : EosKind::ideal;
    try {
        m.sweep_eos = EosParams::cnga(b1, b2);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return io_error;
    }
    return execute(m, out, err);
}

}  // namespace gasnet::cli
