#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "gasnet/generate.hpp"
#include "gasnet/io.hpp"
#include "support.hpp"

namespace gasnet {
namespace {

using namespace gasnet::testing;
using nlohmann::json;

const std::filesystem::path data_dir = GASNET_DATA_DIR;

TEST(NetworkJson, ReadsBundledChain) {
    const auto d = read_network(data_dir / "chain3.json");
    EXPECT_EQ(d, chain3());
}

TEST(NetworkJson, RoundTripIsIdentity) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        GeneratorOptions opts;
        opts.topology = static_cast<Topology>(seed % 3);
        opts.nodes = 3 + seed;
        opts.eos = seed % 2 ? EosKind::cnga : EosKind::ideal;
        const auto net = Network::from(generate_network(opts, seed));
        const auto text = network_to_json(net.description()).dump();
        const auto again = Network::from(network_from_json(json::parse(text)));
        EXPECT_EQ(again, net) << "seed " << seed;
    }
}

TEST(NetworkJson, SlackPressureIsConverted) {
    const auto d = read_network(data_dir / "supply_by_pressure.json");
    EXPECT_DOUBLE_EQ(d.junctions[0].boundary, potential(EosParams::cnga(), 6.0));
}

TEST(NetworkJson, CustomCoefficients) {
    const auto d = network_from_json(json::parse(R"({"eos":"cnga","b1":2,"b2":0.5,"nodes":[],"edges":[]})"));
    EXPECT_EQ(d.eos, EosParams::cnga(2.0, 0.5));
}

TEST(NetworkJson, SchemaErrors) {
    const char* bad[] = {
        R"([])",
        R"({"nodes":[],"edges":[]})",
        R"({"eos":"vdw","nodes":[],"edges":[]})",
        R"({"eos":"cnga","b1":-1,"nodes":[],"edges":[]})",
        R"({"eos":"ideal","edges":[]})",
        R"({"eos":"ideal","nodes":[{"id":"a","slack":true}],"edges":[]})",
        R"({"eos":"ideal","nodes":[{"id":"a","slack":true,"potential":1,"pressure":1}],"edges":[]})",
        R"({"eos":"ideal","nodes":[{"id":"a","slack":false,"potential":1}],"edges":[]})",
        R"({"eos":"ideal","nodes":[{"id":"a","slack":"yes","potential":1}],"edges":[]})",
        R"({"eos":"ideal","nodes":[{"id":"a","slack":false,"withdrawal":"x"}],"edges":[]})",
        R"({"eos":"ideal","nodes":[],"edges":[{"from":"a","to":"b","type":"valve"}]})",
        R"({"eos":"ideal","nodes":[],"edges":[{"from":"a","to":"b","type":"pipe"}]})",
    };
    for (const char* text : bad) EXPECT_THROW(network_from_json(json::parse(text)), SchemaError) << text;
}

TEST(NetworkJson, MissingFileIsIoError) { EXPECT_THROW(read_network(data_dir / "missing.json"), IoError); }

TEST(SolutionJson, RoundTripsState) {
    const auto net = Network::from(cycle3());
    SolveResult r;
    r.state = Eigen::VectorXd::LinSpaced(6, -1.0, 4.0);
    r.status = SolveStatus::converged;
    const auto doc = solution_to_json(net, r);
    EXPECT_EQ(doc["status"], "Converged");
    EXPECT_EQ(doc["nodes"][1]["id"], "n2");
    EXPECT_EQ(max_abs(state_from_solution_json(net, json::parse(doc.dump())) - r.state), 0.0);
}

TEST(SolutionJson, PressureNullWhenMissing) {
    const auto net = Network::from(single_pipe());
    SolveResult r;
    r.state = Eigen::Vector3d(2.0, 2.0, -2.0);
    r.status = SolveStatus::converged;
    const auto doc = solution_to_json(net, r);
    EXPECT_TRUE(doc["nodes"][1]["pressure"].is_null());
    EXPECT_DOUBLE_EQ(doc["nodes"][0]["pressure"].get<double>(), 2.0);
}

TEST(SolutionJson, RejectsMismatchedEdges) {
    const auto net = Network::from(chain3());
    auto doc = json::parse(R"({"nodes":[{"id":"n1","potential":1},{"id":"n2","potential":4},{"id":"n3","potential":3}],
        "edges":[{"from":"n2","to":"n3","flow":1},{"from":"n1","to":"n2","flow":1}]})");
    EXPECT_THROW(state_from_solution_json(net, doc), SchemaError);
    doc["edges"].erase(1);
    EXPECT_THROW(state_from_solution_json(net, doc), SchemaError);
}

TEST(Csv, TraceAndJacobian) {
    std::ostringstream trace;
    write_trace_csv(trace, {{0.1, 3, 1e-12, FailureCause::none}});
    EXPECT_EQ(trace.str().substr(0, 29), "s,newton_iters,residual_norm\n");
    EXPECT_NE(trace.str().find(",3,"), std::string::npos);

    std::ostringstream jac;
    write_jacobian_csv(jac, assemble_jacobian(Network::from(single_pipe()), Eigen::Vector3d(2.0, 2.0, -2.0), 1.0));
    std::istringstream in(jac.str());
    std::string line;
    std::size_t rows = 0;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 1u + 5u);
}

TEST(BoundsJson, Keys) {
    const auto doc = bounds_to_json(compute_bounds(Network::from(chain3()), BoundsMode::paper));
    EXPECT_EQ(doc["mode"], "paper");
    EXPECT_DOUBLE_EQ(doc["L"].get<double>(), 10.0);
    EXPECT_DOUBLE_EQ(doc["phi_m"].get<double>(), 2.0);
}

}  // namespace
}  // namespace gasnet
