#pragma once

#include <stdexcept>
#include <vector>

#include "gasnet/residual.hpp"

namespace gasnet {

enum class OracleMethod { tree, cycle_bisection };

struct OracleSolution {
    StateVector state;
    OracleMethod method = OracleMethod::tree;
};

enum class OracleErrorKind { not_a_tree, multiple_slack_nodes, not_single_cycle };

class OracleError : public std::runtime_error {
public:
    OracleError(OracleErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    OracleErrorKind kind() const { return kind_; }

private:
    OracleErrorKind kind_;
};

/// Exact solution on a tree with one slack junction: flows accumulate the
/// withdrawals of each subtree, potentials propagate outward from the slack.
OracleSolution tree_solve(const Network& network);

/// A network with exactly one cycle and one slack junction, with every flow
/// expressed through the flow t on one pipe of the cycle (the chord).
/// closure(t) is the chord's pipe residual after all other equations have
/// been satisfied by propagation; it is strictly decreasing in t.
class CycleParametrization {
public:
    /// Throws OracleError when the network has more than one slack junction
    /// or not exactly one cycle.
    explicit CycleParametrization(const Network& network);

    std::size_t chord() const { return chord_; }
    const std::vector<std::size_t>& cycle_edges() const { return cycle_; }

    StateVector state(double t) const;
    double closure(double t) const;

private:
    double closure_of(const StateVector& x, double t) const;

    const Network* network_;
    std::size_t chord_ = 0;
    std::vector<std::size_t> cycle_;
    std::vector<std::size_t> bfs_order_;    // tree without the chord, rooted at the slack
    std::vector<std::size_t> parent_edge_;  // per junction; unused for the root
};

/// Solves a single-cycle network by bisection on the chord flow, starting
/// from a bracket of half-width max(phi_m, 1) that is widened until the
/// closure changes sign.
OracleSolution cycle_bisect(const Network& network);

}  // namespace gasnet
