#pragma once

#include <filesystem>
#include <json.hpp>
#include <ostream>
#include <stdexcept>

#include "gasnet/bounds.hpp"
#include "gasnet/feasibility.hpp"
#include "gasnet/network.hpp"
#include "gasnet/solver.hpp"

namespace gasnet {

/// Malformed or incomplete input documents.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Files that cannot be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Network file schema:
///   {"eos": "ideal" | "cnga", "b1": num?, "b2": num?,
///    "nodes": [{"id": str, "slack": bool,
///               "potential": num | "pressure": num   (slack only),
///               "withdrawal": num                    (non-slack only)}],
///    "edges": [{"from": str, "to": str, "type": "pipe", "beta": num} |
///              {"from": str, "to": str, "type": "compressor", "alpha": num}]}
/// Slack pressures (MPa) are converted to potentials with the file's
/// equation of state.
NetworkDescription network_from_json(const nlohmann::json& doc);
nlohmann::json network_to_json(const NetworkDescription& network);

NetworkDescription read_network(const std::filesystem::path& path);
nlohmann::json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// {"status", "residual_norm", "nodes": [{"id", "potential", "pressure" | null,
/// "generalized_only"}], "edges": [{"from", "to", "flow"}]}; node pressures
/// come from the report when one is given.
nlohmann::json solution_to_json(const Network& network, const SolveResult& result,
                                const FeasibilityReport* report = nullptr);

/// Reads the state back from a solution document. Nodes are matched by id,
/// edges by position with from/to checked.
StateVector state_from_solution_json(const Network& network, const nlohmann::json& doc);

nlohmann::json report_to_json(const Network& network, const FeasibilityReport& report);
nlohmann::json bounds_to_json(const DomainBounds& bounds);
nlohmann::json violations_to_json(const std::vector<Violation>& violations);

/// `s,newton_iters,residual_norm`
void write_trace_csv(std::ostream& out, const std::vector<TraceEntry>& trace);
/// `row,col,value`
void write_jacobian_csv(std::ostream& out, const SparseMatrix& jacobian);

}  // namespace gasnet
