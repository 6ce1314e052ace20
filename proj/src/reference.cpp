#include "gasnet/reference.hpp"

#include <cmath>
#include <limits>
#include <queue>

#include "gasnet/bounds.hpp"

namespace gasnet {

namespace {

constexpr auto kNone = static_cast<std::size_t>(-1);

struct RootedTree {
    std::vector<std::size_t> order;        // breadth-first from the root
    std::vector<std::size_t> parent_edge;  // kNone for the root and unreached junctions
};

std::size_t single_slack(const Network& network) {
    const auto slacks = network.slack_junctions();
    if (slacks.size() != 1) {
        throw OracleError(OracleErrorKind::multiple_slack_nodes, "reference oracles need exactly one slack junction");
    }
    return slacks.front();
}

RootedTree grow_tree(const Network& network, std::size_t root, std::size_t skip_edge) {
    RootedTree tree;
    tree.parent_edge.assign(network.junction_count(), kNone);
    std::vector<bool> seen(network.junction_count(), false);
    std::queue<std::size_t> frontier;
    frontier.push(root);
    seen[root] = true;
    while (!frontier.empty()) {
        const auto v = frontier.front();
        frontier.pop();
        tree.order.push_back(v);
        for (auto e : network.incident_edges(v)) {
            if (e == skip_edge) continue;
            const auto w = network.other_end(e, v);
            if (seen[w]) continue;
            seen[w] = true;
            tree.parent_edge[w] = e;
            frontier.push(w);
        }
    }
    return tree;
}

// Fills flows and potentials on the tree edges given per-junction demands
// (withdrawals, adjusted for any flow carried outside the tree).
StateVector propagate(const Network& network, const RootedTree& tree, std::vector<double> demand) {
    const auto ord = ordering(network);
    StateVector x = StateVector::Zero(static_cast<Eigen::Index>(ord.size()));

    for (auto it = tree.order.rbegin(); it != tree.order.rend(); ++it) {
        const auto v = *it;
        const auto e = tree.parent_edge[v];
        if (e == kNone) continue;
        const auto parent = network.other_end(e, v);
        x[ord.flow(e)] = network.edge(e).from == parent ? demand[v] : -demand[v];
        demand[parent] += demand[v];
    }

    const auto root = tree.order.front();
    x[ord.potential(root)] = network.junction(root).potential();
    for (std::size_t k = 1; k < tree.order.size(); ++k) {
        const auto v = tree.order[k];
        const auto e = tree.parent_edge[v];
        const auto& edge = network.edge(e);
        const auto parent = network.other_end(e, v);
        const double pi_parent = x[ord.potential(parent)];
        const bool downstream = edge.from == parent;
        double pi;
        if (edge.is_pipe()) {
            const double phi = x[ord.flow(e)];
            const double drop = edge.beta() * phi * std::abs(phi);
            pi = downstream ? pi_parent - drop : pi_parent + drop;
        } else {
            pi = downstream ? edge.gamma * pi_parent : pi_parent / edge.gamma;
        }
        x[ord.potential(v)] = pi;
    }
    return x;
}

std::vector<double> withdrawals(const Network& network) {
    std::vector<double> q(network.junction_count(), 0.0);
    for (std::size_t i = 0; i < network.junction_count(); ++i) {
        if (!network.junction(i).is_slack()) q[i] = network.junction(i).withdrawal();
    }
    return q;
}

}  // namespace

OracleSolution tree_solve(const Network& network) {
    const auto root = single_slack(network);
    if (network.edge_count() + 1 != network.junction_count()) {
        throw OracleError(OracleErrorKind::not_a_tree, "tree_solve: edge count is not junction count - 1");
    }
    const auto tree = grow_tree(network, root, kNone);
    if (tree.order.size() != network.junction_count()) {
        throw OracleError(OracleErrorKind::not_a_tree, "tree_solve: network is not connected");
    }
    return {propagate(network, tree, withdrawals(network)), OracleMethod::tree};
}

CycleParametrization::CycleParametrization(const Network& network) : network_(&network) {
    const auto root = single_slack(network);
    const auto n = network.junction_count();
    if (network.edge_count() != n) {
        throw OracleError(OracleErrorKind::not_single_cycle, "cycle_bisect: need exactly one cycle (|E| = |V|)");
    }

    // Peel leaves; the edges left between surviving junctions form the cycle.
    std::vector<std::size_t> degree(n, 0);
    for (const auto& e : network.edges()) {
        ++degree[e.from];
        ++degree[e.to];
    }
    std::vector<bool> removed(n, false);
    std::queue<std::size_t> leaves;
    for (std::size_t v = 0; v < n; ++v) {
        if (degree[v] <= 1) leaves.push(v);
    }
    while (!leaves.empty()) {
        const auto v = leaves.front();
        leaves.pop();
        if (removed[v]) continue;
        removed[v] = true;
        for (auto e : network.incident_edges(v)) {
            const auto w = network.other_end(e, v);
            if (!removed[w] && --degree[w] == 1) leaves.push(w);
        }
    }
    for (std::size_t e = 0; e < network.edge_count(); ++e) {
        const auto& edge = network.edge(e);
        if (!removed[edge.from] && !removed[edge.to]) cycle_.push_back(e);
    }

    chord_ = kNone;
    for (auto e : cycle_) {
        if (network.edge(e).is_pipe()) {
            chord_ = e;
            break;
        }
    }
    if (cycle_.empty() || chord_ == kNone) {
        throw OracleError(OracleErrorKind::not_single_cycle, "cycle_bisect: no cycle containing a pipe");
    }

    auto tree = grow_tree(network, root, chord_);
    if (tree.order.size() != n) {
        throw OracleError(OracleErrorKind::not_single_cycle, "cycle_bisect: network is not connected");
    }
    bfs_order_ = std::move(tree.order);
    parent_edge_ = std::move(tree.parent_edge);
}

StateVector CycleParametrization::state(double t) const {
    const auto& network = *network_;
    auto demand = withdrawals(network);
    const auto& chord = network.edge(chord_);
    // flow t leaves the tree at the chord's tail and re-enters at its head
    demand[chord.from] += t;
    demand[chord.to] -= t;

    RootedTree tree{bfs_order_, parent_edge_};
    StateVector x = propagate(network, tree, std::move(demand));
    x[ordering(network).flow(chord_)] = t;
    return x;
}

double CycleParametrization::closure_of(const StateVector& x, double t) const {
    const auto ord = ordering(*network_);
    const auto& chord = network_->edge(chord_);
    return x[ord.potential(chord.from)] - x[ord.potential(chord.to)] - chord.beta() * t * std::abs(t);
}

double CycleParametrization::closure(double t) const { return closure_of(state(t), t); }

OracleSolution cycle_bisect(const Network& network) {
    const CycleParametrization cycle(network);

    double half = std::max(compute_bounds(network, BoundsMode::safe).phi_m, 1.0);
    for (int k = 0; k < 200 && !(cycle.closure(-half) > 0.0 && cycle.closure(half) < 0.0); ++k) half *= 2.0;

    double lo = -half;  // closure > 0
    double hi = half;   // closure < 0
    double best_t = 0.0;
    double best_g = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 400; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double g = cycle.closure(mid);
        if (std::abs(g) < best_g) {
            best_g = std::abs(g);
            best_t = mid;
        }
        if (std::abs(g) <= 1e-12) break;
        if (g > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {cycle.state(best_t), OracleMethod::cycle_bisection};
}

}  // namespace gasnet
