#include <gtest/gtest.h>

#include <cmath>

#include "gasnet/generate.hpp"
#include "gasnet/reference.hpp"
#include "support.hpp"

namespace gasnet {
namespace {

using namespace gasnet::testing;

Eigen::VectorXd state(std::initializer_list<double> values) {
    Eigen::VectorXd x(static_cast<Eigen::Index>(values.size()));
    Eigen::Index k = 0;
    for (double v : values) x[k++] = v;
    return x;
}

TEST(TreeSolve, SinglePipe) {
    const auto sol = tree_solve(Network::from(single_pipe()));
    EXPECT_EQ(sol.method, OracleMethod::tree);
    EXPECT_NEAR(max_abs(sol.state - state({2.0, 2.0, -2.0})), 0.0, 1e-15);
}

TEST(TreeSolve, CompressorChain) {
    const auto sol = tree_solve(Network::from(chain3()));
    EXPECT_NEAR(max_abs(sol.state - state({1.0, 1.0, 1.0, 4.0, 3.0})), 0.0, 1e-15);
}

TEST(TreeSolve, IdleStar) {
    NetworkDescription d{EosParams::ideal(),
                         {slack("s", 7.0), demand("a", 0.0), demand("b", 0.0), demand("c", 0.0)},
                         {pipe("s", "a", 1.0), pipe("b", "s", 2.0), pipe("s", "c", 3.0)}};
    const auto sol = tree_solve(Network::from(d));
    EXPECT_EQ(max_abs(sol.state - state({0.0, 0.0, 0.0, 7.0, 7.0, 7.0, 7.0})), 0.0);
}

TEST(TreeSolve, UpstreamCompressorAndReversedPipe) {
    // slack in the middle; the compressor feeds the slack from a supply node
    NetworkDescription d{EosParams::ideal(),
                         {demand("src", -3.0), slack("s", 4.0), demand("d", 1.0)},
                         {compressor("src", "s", 2.0), pipe("d", "s", 0.5)}};
    const auto net = Network::from(d);
    const auto sol = tree_solve(net);
    // compressor carries 3 into s; pipe d -> s carries -1; pi_src = 4 / 4; pi_d = 4 + 0.5 * (-1) * 1
    EXPECT_NEAR(max_abs(sol.state - state({3.0, -1.0, 1.0, 4.0, 3.5})), 0.0, 1e-15);
    EXPECT_EQ(max_abs(assemble_residual(net, sol.state, 1.0)), 0.0);
}

TEST(TreeSolve, Errors) {
    try {
        tree_solve(Network::from(cycle3()));
        FAIL();
    } catch (const OracleError& e) {
        EXPECT_EQ(e.kind(), OracleErrorKind::not_a_tree);
    }
    NetworkDescription two{EosParams::ideal(), {slack("a", 1.0), slack("b", 2.0)}, {pipe("a", "b", 1.0)}};
    try {
        tree_solve(Network::from(two));
        FAIL();
    } catch (const OracleError& e) {
        EXPECT_EQ(e.kind(), OracleErrorKind::multiple_slack_nodes);
    }
}

TEST(CycleBisect, TriangleSatisfiesResidual) {
    const auto net = Network::from(cycle3());
    const auto sol = cycle_bisect(net);
    EXPECT_EQ(sol.method, OracleMethod::cycle_bisection);
    EXPECT_LE(max_abs(assemble_residual(net, sol.state, 1.0)), 1e-11);
    EXPECT_NEAR(sol.state[0] + sol.state[2], 2.0, 1e-12);
}

TEST(CycleBisect, SymmetricCycleSplitsEvenly) {
    NetworkDescription d{EosParams::ideal(),
                         {slack("s", 10.0), demand("a", 1.0), demand("b", 1.0), demand("c", 1.0)},
                         {pipe("s", "a", 1.0), pipe("a", "b", 1.0), pipe("c", "b", 1.0), pipe("s", "c", 1.0)}};
    const auto net = Network::from(d);
    const auto sol = cycle_bisect(net);
    // flows s->a and s->c carry 1.5 each, nothing crosses b except the two halves
    EXPECT_NEAR(sol.state[0], 1.5, 1e-12);
    EXPECT_NEAR(sol.state[3], 1.5, 1e-12);
    EXPECT_NEAR(sol.state[1], 0.5, 1e-12);
    EXPECT_NEAR(sol.state[2], 0.5, 1e-12);
    EXPECT_NEAR(sol.state[5], sol.state[7], 1e-12);
}

TEST(CycleBisect, IdleCycleHasNoLoopFlow) {
    NetworkDescription d{EosParams::ideal(),
                         {slack("s", 2.0), demand("a", 0.0), demand("b", 0.0)},
                         {compressor("s", "a", 1.5), pipe("a", "b", 1.0), pipe("b", "s", 1.0)}};
    const auto net = Network::from(d);
    const auto sol = cycle_bisect(net);
    EXPECT_LE(max_abs(assemble_residual(net, sol.state, 1.0)), 1e-11);
    // the compressor lifts a to 4.5 and the loop returns gas to s
    EXPECT_GT(sol.state[0], 0.0);

    NetworkDescription flat{EosParams::ideal(),
                            {slack("s", 2.0), demand("a", 0.0), demand("b", 0.0)},
                            {pipe("s", "a", 1.5), pipe("a", "b", 1.0), pipe("b", "s", 1.0)}};
    const auto idle = cycle_bisect(Network::from(flat));
    EXPECT_LE(max_abs(idle.state.head(3)), 1e-12);
    EXPECT_LE(max_abs(idle.state.tail(3) - state({2.0, 2.0, 2.0})), 1e-12);
}

TEST(CycleBisect, ClosureIsDecreasing) {
    const auto net = Network::from(cycle3());
    const CycleParametrization cycle(net);
    EXPECT_EQ(cycle.cycle_edges().size(), 3u);
    EXPECT_TRUE(net.edge(cycle.chord()).is_pipe());
    double previous = cycle.closure(-10.0);
    for (double t = -9.5; t <= 10.0; t += 0.5) {
        const double g = cycle.closure(t);
        EXPECT_LT(g, previous);
        previous = g;
    }
}

TEST(CycleBisect, RejectsOtherTopologies) {
    try {
        cycle_bisect(Network::from(chain3()));
        FAIL();
    } catch (const OracleError& e) {
        EXPECT_EQ(e.kind(), OracleErrorKind::not_single_cycle);
    }
}

TEST(CycleBisect, GeneratedCyclesWithAppendages) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GeneratorOptions opts;
        opts.topology = Topology::cycle;
        opts.nodes = 3 + seed;
        const auto net = Network::from(generate_network(opts, seed));
        const auto sol = cycle_bisect(net);
        EXPECT_LE(max_abs(assemble_residual(net, sol.state, 1.0)), 1e-10) << "seed " << seed;
    }
}

}  // namespace
}  // namespace gasnet
