#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gasnet/bounds.hpp"
#include "gasnet/residual.hpp"

namespace gasnet {

struct SolverConfig {
    double tol = 1e-10;  ///< residual infinity-norm
    int max_newton_iters = 50;
    double ds_init = 0.1;
    double ds_min = 1e-4;
    double ds_growth = 1.5;
    double damping = 0.5;
    int max_halvings = 30;
    double eps = 1e-12;  ///< Jacobian regularization at zero pipe flow
    bool check_bounds = true;

    /// Throws std::invalid_argument unless tol > 0 and 0 < ds_min <= ds_init <= 1.
    void validate() const;
};

enum class SolveStatus { converged, singular_at_s0, newton_diverged, homotopy_stalled, boundary_violation };

const char* to_string(SolveStatus status);

enum class FailureCause { none, singular_matrix, no_decrease, iteration_cap };

const char* to_string(FailureCause cause);

struct TraceEntry {
    double s = 0.0;
    int newton_iters = 0;
    double residual_norm = 0.0;
    FailureCause cause = FailureCause::none;
};

struct SolveResult {
    StateVector state;
    double residual_norm = 0.0;
    SolveStatus status = SolveStatus::newton_diverged;
    std::vector<TraceEntry> trace;
    /// Number of accepted states found outside the safe-mode hypercube.
    std::size_t bound_excursions = 0;

    bool converged() const { return status == SolveStatus::converged; }
    /// True when a solution of F(x, 1) = 0 was reached, whether or not the
    /// hypercube check flagged it.
    bool has_solution() const {
        return status == SolveStatus::converged || status == SolveStatus::boundary_violation;
    }
};

class SingularAtS0 : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact solution of the linear system F(x, 0) = 0. Throws SingularAtS0 when
/// the matrix cannot be factored, which admissible networks never trigger.
StateVector solve_linear_s0(const Network& network);

/// Damped Newton on F(., s) = 0 starting at x0. Steps are halved until the
/// residual infinity-norm decreases.
SolveResult newton_solve(const Network& network, const StateVector& x0, double s, const SolverConfig& cfg = {});

/// Continuation in s from the linear solution at s = 0 to s = 1, with Newton
/// as corrector at each step. Accepted states are checked against the
/// safe-mode hypercube.
SolveResult homotopy_solve(const Network& network, const SolverConfig& cfg = {});

enum class SolveMethod { automatic, newton, homotopy };

/// automatic: Newton at s = 1 from the linear solution, falling back to
/// homotopy_solve when it does not converge.
SolveResult solve(const Network& network, SolveMethod method, const SolverConfig& cfg = {});

struct ProbeTrial {
    std::size_t index = 0;
    SolveStatus status = SolveStatus::newton_diverged;
    double residual_norm = 0.0;
    /// Index into UniquenessReport::distinct_states for converged trials.
    std::optional<std::size_t> cluster;
};

struct UniquenessReport {
    std::vector<ProbeTrial> trials;
    std::vector<StateVector> distinct_states;
    double distinct_tol = 1e-6;

    std::size_t converged_count() const;
};

/// Newton at s = 1 from `trials` starts drawn uniformly from the safe-mode
/// hypercube. Converged states closer than distinct_tol (infinity norm) are
/// grouped; a unique solution yields at most one group.
UniquenessReport uniqueness_probe(const Network& network, const SolverConfig& cfg, std::size_t trials,
                                  std::uint64_t seed, double distinct_tol = 1e-6);

/// Same as uniqueness_probe with explicit starts, each clamped into the
/// hypercube before iterating.
UniquenessReport uniqueness_probe_from(const Network& network, const SolverConfig& cfg,
                                       const std::vector<StateVector>& starts, double distinct_tol = 1e-6);

/// Componentwise clamp into the open hypercube |x_i| < half_width.
StateVector clamp_to_bounds(const StateVector& x, const DomainBounds& bounds);

}  // namespace gasnet
