#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gasnet/bounds.hpp"
#include "gasnet/eos.hpp"
#include "gasnet/generate.hpp"
#include "gasnet/solver.hpp"

namespace gasnet::cli {

/// Process exit codes. Physical infeasibility (1) is kept apart from
/// algorithm failure (2).
enum ExitCode : int {
    ok = 0,
    infeasible = 1,
    solver_failure = 2,
    invalid_network = 3,
    io_error = 4,
};

enum class Command { validate, bounds, solve, feasibility, alpha_error, generate };

struct RunManifest {
    Command command = Command::validate;
    std::string input;
    std::optional<std::string> solution_input;
    std::optional<std::string> output;
    std::optional<std::string> trace_output;
    std::optional<std::string> jacobian_output;

    std::string method = "auto";
    SolverConfig solver;
    std::size_t probe_trials = 0;
    std::uint64_t seed = 0;
    bool solve_first = false;

    BoundsMode bounds_mode = BoundsMode::safe;
    bool json = false;

    SweepGrid sweep;
    EosParams sweep_eos = EosParams::cnga();

    GeneratorOptions generator;
};

/// Executes one command. Machine-readable results go to `out`, diagnostics to `err`.
int execute(const RunManifest& manifest, std::ostream& out, std::ostream& err);

/// Parses command-line arguments (without the program name) and executes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gasnet::cli
