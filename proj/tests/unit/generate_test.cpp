#include <gtest/gtest.h>

#include <stdexcept>

#include "gasnet/generate.hpp"

namespace gasnet {
namespace {

TEST(GenerateNetwork, SameSeedSameNetwork) {
    GeneratorOptions opts;
    opts.topology = Topology::mesh;
    opts.nodes = 30;
    EXPECT_EQ(generate_network(opts, 9), generate_network(opts, 9));
    EXPECT_FALSE(generate_network(opts, 9) == generate_network(opts, 10));
}

TEST(GenerateNetwork, EdgeCounts) {
    GeneratorOptions opts;
    opts.nodes = 25;
    EXPECT_EQ(generate_network(opts, 1).edges.size(), 24u);
    opts.topology = Topology::mesh;
    opts.extra_edges = 4;
    EXPECT_EQ(generate_network(opts, 1).edges.size(), 28u);
    opts.topology = Topology::cycle;
    EXPECT_EQ(generate_network(opts, 1).edges.size(), 25u);
}

TEST(GenerateNetwork, AlwaysAdmissible) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GeneratorOptions opts;
        opts.topology = static_cast<Topology>(seed % 3);
        opts.nodes = 3 + seed % 60;
        opts.slack_count = 1 + seed % 4;
        opts.compressor_fraction = 0.2 + 0.3 * static_cast<double>(seed % 3);
        const auto d = generate_network(opts, seed);
        const auto r = validate(d);
        ASSERT_TRUE(r.ok()) << "seed " << seed << ": " << to_string(r.violations.front().kind);
        EXPECT_EQ(r.network->slack_junctions().size(), opts.slack_count);
        EXPECT_LE(static_cast<double>(r.network->compressor_count()),
                  opts.compressor_fraction * static_cast<double>(d.edges.size()));
    }
}

TEST(GenerateNetwork, RejectsBadOptions) {
    GeneratorOptions opts;
    opts.nodes = 1;
    EXPECT_THROW(generate_network(opts, 0), std::invalid_argument);
    opts.nodes = 5;
    opts.slack_count = 6;
    EXPECT_THROW(generate_network(opts, 0), std::invalid_argument);
}

}  // namespace
}  // namespace gasnet
