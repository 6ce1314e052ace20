#include "gasnet/solver.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace gasnet {

namespace {

double inf_norm(const Eigen::VectorXd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

// NaN compares false, so a non-finite norm never counts as a decrease.
bool decreased(double trial, double current) { return trial < current; }

}  // namespace

void SolverConfig::validate() const {
    if (!(tol > 0.0)) throw std::invalid_argument("solver: tol must be positive");
    if (!(ds_min > 0.0 && ds_min <= ds_init && ds_init <= 1.0)) {
        throw std::invalid_argument("solver: need 0 < ds_min <= ds_init <= 1");
    }
    if (!(damping > 0.0 && damping < 1.0)) throw std::invalid_argument("solver: damping must lie in (0, 1)");
    if (!(ds_growth >= 1.0)) throw std::invalid_argument("solver: ds_growth must be >= 1");
    if (max_newton_iters < 0 || max_halvings < 0) throw std::invalid_argument("solver: negative iteration limit");
}

const char* to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::converged: return "Converged";
        case SolveStatus::singular_at_s0: return "SingularAtS0";
        case SolveStatus::newton_diverged: return "NewtonDiverged";
        case SolveStatus::homotopy_stalled: return "HomotopyStalled";
        case SolveStatus::boundary_violation: return "BoundaryViolation";
    }
    return "Unknown";
}

const char* to_string(FailureCause cause) {
    switch (cause) {
        case FailureCause::none: return "none";
        case FailureCause::singular_matrix: return "singular_matrix";
        case FailureCause::no_decrease: return "no_decrease";
        case FailureCause::iteration_cap: return "iteration_cap";
    }
    return "unknown";
}

StateVector solve_linear_s0(const Network& network) {
    const auto n = static_cast<Eigen::Index>(ordering(network).size());
    const StateVector zero = StateVector::Zero(n);
    // F(x, 0) is affine: F(x, 0) = J x + F(0, 0) with a constant J.
    const Eigen::VectorXd offset = assemble_residual(network, zero, 0.0);
    try {
        return solve_sparse(assemble_jacobian(network, zero, 0.0), -offset);
    } catch (const SingularMatrix& e) {
        throw SingularAtS0(std::string("linear system at s = 0 is singular (") + e.what() + ")");
    }
}

SolveResult newton_solve(const Network& network, const StateVector& x0, double s, const SolverConfig& cfg) {
    cfg.validate();
    SolveResult result;
    result.state = x0;
    Eigen::VectorXd f = assemble_residual(network, result.state, s);
    double norm = inf_norm(f);

    int iters = 0;
    FailureCause cause = FailureCause::none;
    while (!(norm <= cfg.tol)) {
        if (iters >= cfg.max_newton_iters) {
            cause = FailureCause::iteration_cap;
            break;
        }

        Eigen::VectorXd step;
        try {
            step = solve_sparse(assemble_jacobian(network, result.state, s, cfg.eps), -f);
        } catch (const SingularMatrix&) {
            cause = FailureCause::singular_matrix;
            break;
        }

        bool accepted = false;
        double lambda = 1.0;
        for (int k = 0; k <= cfg.max_halvings; ++k, lambda *= cfg.damping) {
            StateVector trial = result.state + lambda * step;
            Eigen::VectorXd f_trial = assemble_residual(network, trial, s);
            const double trial_norm = inf_norm(f_trial);
            if (decreased(trial_norm, norm)) {
                result.state = std::move(trial);
                f = std::move(f_trial);
                norm = trial_norm;
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            cause = FailureCause::no_decrease;
            break;
        }
        ++iters;
    }

    result.residual_norm = norm;
    result.status = cause == FailureCause::none ? SolveStatus::converged : SolveStatus::newton_diverged;
    result.trace.push_back({s, iters, norm, cause});
    return result;
}

SolveResult homotopy_solve(const Network& network, const SolverConfig& cfg) {
    cfg.validate();
    SolveResult result;
    try {
        result.state = solve_linear_s0(network);
    } catch (const SingularAtS0&) {
        result.status = SolveStatus::singular_at_s0;
        result.residual_norm = std::numeric_limits<double>::infinity();
        return result;
    }

    const auto bounds = compute_bounds(network, BoundsMode::safe);
    auto check = [&](const StateVector& x) {
        if (cfg.check_bounds && !bounds.encloses(x)) ++result.bound_excursions;
    };
    check(result.state);

    double s = 0.0;
    double ds = cfg.ds_init;
    while (s < 1.0) {
        // the s = 1 system may already hold, e.g. when no pipe carries flow
        const double target_norm = inf_norm(assemble_residual(network, result.state, 1.0));
        if (target_norm <= cfg.tol) {
            s = 1.0;
            result.trace.push_back({1.0, 0, target_norm, FailureCause::none});
            break;
        }

        const double s_next = s + ds >= 1.0 - 1e-12 ? 1.0 : s + ds;
        auto step = newton_solve(network, result.state, s_next, cfg);
        if (step.converged()) {
            s = s_next;
            result.state = std::move(step.state);
            result.trace.push_back({s, step.trace.back().newton_iters, step.residual_norm, FailureCause::none});
            check(result.state);
            ds = std::min(ds * cfg.ds_growth, 1.0 - s);
            continue;
        }

        ds *= 0.5;
        if (ds < cfg.ds_min) {
            result.trace.push_back(step.trace.back());
            result.status = SolveStatus::homotopy_stalled;
            result.residual_norm = inf_norm(assemble_residual(network, result.state, 1.0));
            return result;
        }
    }

    result.residual_norm = inf_norm(assemble_residual(network, result.state, 1.0));
    result.status = result.bound_excursions > 0 ? SolveStatus::boundary_violation : SolveStatus::converged;
    return result;
}

SolveResult solve(const Network& network, SolveMethod method, const SolverConfig& cfg) {
    if (method == SolveMethod::homotopy) return homotopy_solve(network, cfg);

    StateVector x0;
    try {
        x0 = solve_linear_s0(network);
    } catch (const SingularAtS0&) {
        SolveResult failed;
        failed.status = SolveStatus::singular_at_s0;
        failed.residual_norm = std::numeric_limits<double>::infinity();
        return failed;
    }

    auto direct = newton_solve(network, x0, 1.0, cfg);
    if (!direct.converged() && method == SolveMethod::automatic) return homotopy_solve(network, cfg);

    if (direct.converged() && cfg.check_bounds && !compute_bounds(network, BoundsMode::safe).encloses(direct.state)) {
        direct.bound_excursions = 1;
        direct.status = SolveStatus::boundary_violation;
    }
    return direct;
}

std::size_t UniquenessReport::converged_count() const {
    std::size_t n = 0;
    for (const auto& t : trials) n += t.cluster.has_value() ? 1 : 0;
    return n;
}

StateVector clamp_to_bounds(const StateVector& x, const DomainBounds& bounds) {
    const double limit = bounds.half_width > 0.0 ? std::nextafter(bounds.half_width, 0.0) : 0.0;
    return x.cwiseMax(-limit).cwiseMin(limit);
}

UniquenessReport uniqueness_probe_from(const Network& network, const SolverConfig& cfg,
                                       const std::vector<StateVector>& starts, double distinct_tol) {
    const auto bounds = compute_bounds(network, BoundsMode::safe);
    UniquenessReport report;
    report.distinct_tol = distinct_tol;

    for (std::size_t t = 0; t < starts.size(); ++t) {
        const auto run = newton_solve(network, clamp_to_bounds(starts[t], bounds), 1.0, cfg);
        ProbeTrial trial{t, run.status, run.residual_norm, std::nullopt};
        if (run.converged()) {
            for (std::size_t c = 0; c < report.distinct_states.size(); ++c) {
                if (inf_norm(report.distinct_states[c] - run.state) <= distinct_tol) {
                    trial.cluster = c;
                    break;
                }
            }
            if (!trial.cluster) {
                trial.cluster = report.distinct_states.size();
                report.distinct_states.push_back(run.state);
            }
        }
        report.trials.push_back(trial);
    }
    return report;
}

UniquenessReport uniqueness_probe(const Network& network, const SolverConfig& cfg, std::size_t trials,
                                  std::uint64_t seed, double distinct_tol) {
    const auto bounds = compute_bounds(network, BoundsMode::safe);
    const auto n = static_cast<Eigen::Index>(ordering(network).size());
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    std::vector<StateVector> starts;
    starts.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        StateVector x(n);
        for (Eigen::Index k = 0; k < n; ++k) x[k] = unit(rng) * bounds.half_width;
        starts.push_back(std::move(x));
    }
    return uniqueness_probe_from(network, cfg, starts, distinct_tol);
}

}  // namespace gasnet
