#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gasnet/cli.hpp"
#include "gasnet/io.hpp"

namespace gasnet {
namespace {

using nlohmann::json;

const std::filesystem::path data_dir = GASNET_DATA_DIR;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string net(const char* name) { return (data_dir / name).string(); }

class CliFiles : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("gasnet_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }
    std::string path(const char* name) const { return (dir_ / name).string(); }

    std::filesystem::path dir_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TEST(Cli, SolveFeasibleChain) {
    const auto r = run({"solve", net("chain3.json")});
    EXPECT_EQ(r.code, cli::ok);
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc["status"], "Converged");
    EXPECT_EQ(doc["feasibility"]["overall"], "Feasible");
    EXPECT_NEAR(doc["nodes"][1]["potential"].get<double>(), 4.0, 1e-12);
}

TEST(Cli, SolveIdealSinglePipeIsInfeasibleNotFailure) {
    const auto r = run({"solve", net("single_pipe.json")});
    EXPECT_EQ(r.code, cli::infeasible);
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc["status"], "Converged");
    EXPECT_EQ(doc["feasibility"]["overall"], "NoPressureSolution");
    EXPECT_NEAR(doc["nodes"][1]["potential"].get<double>(), -2.0, 1e-10);
    EXPECT_NE(r.err.find("n2"), std::string::npos);
}

TEST(Cli, SolveCngaSinglePipeIsInfeasible) {
    const auto r = run({"solve", net("single_pipe_cnga.json"), "--method", "homotopy"});
    EXPECT_EQ(r.code, cli::infeasible);
    EXPECT_EQ(json::parse(r.out)["feasibility"]["overall"], "Infeasible");
}

TEST(Cli, OracleMethod) {
    const auto tree = run({"solve", net("chain3.json"), "--method", "oracle"});
    EXPECT_EQ(tree.code, cli::ok);
    const auto cycle = run({"solve", net("cycle3.json"), "--method", "oracle"});
    EXPECT_EQ(cycle.code, cli::ok);
    const auto homotopy = run({"solve", net("cycle3.json"), "--method", "homotopy"});
    const auto a = json::parse(cycle.out)["edges"][0]["flow"].get<double>();
    const auto b = json::parse(homotopy.out)["edges"][0]["flow"].get<double>();
    EXPECT_NEAR(a, b, 1e-8);
}

TEST(Cli, ValidateReportsViolations) {
    const auto r = run({"validate", net("no_slack.json")});
    EXPECT_EQ(r.code, cli::invalid_network);
    EXPECT_NE(r.err.find("NoSlackNode"), std::string::npos);
    EXPECT_EQ(json::parse(r.out)["violations"][0]["kind"], "NoSlackNode");

    EXPECT_EQ(run({"validate", net("slack_compressor_slack.json")}).code, cli::invalid_network);
    EXPECT_EQ(run({"solve", net("compressor_cycle.json")}).code, cli::invalid_network);
    EXPECT_EQ(run({"validate", net("cycle3.json")}).code, cli::ok);
}

TEST(Cli, IoErrors) {
    EXPECT_EQ(run({"solve", net("missing.json")}).code, cli::io_error);
    EXPECT_EQ(run({"solve"}).code, cli::io_error);
    EXPECT_EQ(run({"frobnicate"}).code, cli::io_error);
    EXPECT_EQ(run({"feasibility", net("chain3.json")}).code, cli::io_error);
    EXPECT_EQ(run({"--help"}).code, cli::ok);
}

TEST(Cli, Bounds) {
    const auto r = run({"bounds", net("chain3.json"), "--mode", "paper", "--json"});
    EXPECT_EQ(r.code, cli::ok);
    EXPECT_DOUBLE_EQ(json::parse(r.out)["L"].get<double>(), 10.0);
    const auto table = run({"bounds", net("chain3.json")});
    EXPECT_NE(table.out.find("L       20"), std::string::npos);
}

TEST_F(CliFiles, SolveThenClassifyFromFile) {
    const auto solution = path("solution.json");
    ASSERT_EQ(run({"solve", net("single_pipe.json"), "-o", solution}).code, cli::infeasible);
    const auto r = run({"feasibility", net("single_pipe.json"), "--solution", solution});
    EXPECT_EQ(r.code, cli::infeasible);
    EXPECT_EQ(json::parse(r.out)["overall"], "NoPressureSolution");
    EXPECT_EQ(run({"feasibility", net("chain3.json"), "--solve"}).code, cli::ok);
}

TEST_F(CliFiles, TraceJacobianAndProbe) {
    const auto trace = path("trace.csv");
    const auto jac = path("jac.csv");
    const auto r = run({"solve", net("cycle3.json"), "--method", "homotopy", "--trace", trace, "--dump-jacobian", jac,
                        "--probe", "5", "--seed", "3"});
    EXPECT_EQ(r.code, cli::ok);
    EXPECT_EQ(slurp(trace).rfind("s,newton_iters,residual_norm\n", 0), 0u);
    EXPECT_EQ(slurp(jac).rfind("row,col,value\n", 0), 0u);
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc["uniqueness"]["trials"], 5);
    EXPECT_LE(doc["uniqueness"]["distinct"].get<int>(), 1);
}

TEST_F(CliFiles, GenerateThenSolve) {
    const auto file = path("mesh.json");
    ASSERT_EQ(run({"generate", "--topology", "mesh", "--nodes", "30", "--seed", "4", "-o", file}).code, cli::ok);
    const auto r = run({"solve", file});
    EXPECT_NE(r.code, cli::solver_failure);
    EXPECT_EQ(json::parse(r.out)["status"], "Converged");
}

TEST_F(CliFiles, AlphaErrorCsv) {
    const auto file = path("sweep.csv");
    const auto r = run({"alpha-error", "--p-count", "4", "--alpha-count", "3", "-o", file});
    EXPECT_EQ(r.code, cli::ok);
    const auto text = slurp(file);
    EXPECT_EQ(text.rfind("p_mpa,alpha,alpha_cnga,abs_err\n", 0), 0u);
    EXPECT_NE(text.find("# max_abs_err="), std::string::npos);
    EXPECT_EQ(run({"alpha-error", "--p-min", "0"}).code, cli::io_error);
}

}  // namespace
}  // namespace gasnet
