#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "gasnet/eos.hpp"

namespace gasnet {

enum class JunctionKind { slack, nonslack };

/// A junction as described in an input file. Slack junctions carry a
/// potential; non-slack junctions carry a withdrawal q, defined by
/// inflow - outflow = q (positive q is net delivery out of the network).
struct JunctionSpec {
    std::string id;
    JunctionKind kind = JunctionKind::nonslack;
    double boundary = 0.0;

    bool is_slack() const { return kind == JunctionKind::slack; }
    bool operator==(const JunctionSpec&) const = default;
};

struct Pipe {
    double beta = 1.0;
    bool operator==(const Pipe&) const = default;
};

struct Compressor {
    double alpha = 1.0;
    bool operator==(const Compressor&) const = default;
};

using Device = std::variant<Pipe, Compressor>;

struct EdgeSpec {
    std::string from;
    std::string to;
    Device device;
    bool operator==(const EdgeSpec&) const = default;
};

/// Unvalidated network as read from a file.
struct NetworkDescription {
    EosParams eos;
    std::vector<JunctionSpec> junctions;
    std::vector<EdgeSpec> edges;
    bool operator==(const NetworkDescription&) const = default;
};

enum class ViolationKind {
    no_slack_node,
    compressor_only_slack_path,
    compressor_only_cycle,
    dangling_edge,
    duplicate_id,
    non_positive_resistance,
    compressor_ratio_below_one,
    disconnected_graph,
    self_loop,
};

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string message;
};

struct Junction {
    std::string id;
    JunctionKind kind = JunctionKind::nonslack;
    double boundary = 0.0;

    bool is_slack() const { return kind == JunctionKind::slack; }
    /// Boundary potential; meaningful for slack junctions only.
    double potential() const { return boundary; }
    /// Withdrawal; meaningful for non-slack junctions only.
    double withdrawal() const { return boundary; }
};

struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    Device device;
    /// Potential ratio alpha^2, zero for pipes.
    double gamma = 0.0;

    bool is_pipe() const { return std::holds_alternative<Pipe>(device); }
    bool is_compressor() const { return std::holds_alternative<Compressor>(device); }
    double beta() const { return std::get<Pipe>(device).beta; }
    double alpha() const { return std::get<Compressor>(device).alpha; }
};

class Network;

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// Immutable, validated network. Junction and edge order is the input order.
class Network {
public:
    /// Validates and throws ValidationError listing every violation.
    static Network from(const NetworkDescription& description);

    /// Builds a network resolving ids but skipping the admissibility checks.
    /// Throws ValidationError only for unresolvable ids. Intended for
    /// diagnostics and tests that need inadmissible networks.
    static Network unchecked(const NetworkDescription& description);

    const EosParams& eos() const { return eos_; }
    const std::vector<Junction>& junctions() const { return junctions_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Junction& junction(std::size_t index) const { return junctions_[index]; }
    const Edge& edge(std::size_t index) const { return edges_[index]; }
    std::size_t junction_count() const { return junctions_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t pipe_count() const;
    std::size_t compressor_count() const;

    std::optional<std::size_t> find_junction(const std::string& id) const;
    /// Edge indices incident to a junction, in edge order.
    const std::vector<std::size_t>& incident_edges(std::size_t junction) const { return incidence_[junction]; }
    std::size_t other_end(std::size_t edge, std::size_t junction) const;

    std::vector<std::size_t> slack_junctions() const;
    /// Component label per junction, labels numbered in order of first appearance.
    std::vector<std::size_t> component_labels() const;

    NetworkDescription description() const;

    bool operator==(const Network& other) const;

private:
    Network() = default;
    static Network build(const NetworkDescription& description);

    EosParams eos_;
    std::vector<Junction> junctions_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> incidence_;
};

struct ValidationResult {
    std::optional<Network> network;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks ids, device data, and the admissibility assumptions: at least one
/// slack junction, no compressor-only path between slack junctions, no
/// compressor-only cycle, and a slack junction in every connected component.
/// All violations are reported.
ValidationResult validate(const NetworkDescription& description);

/// Position of each unknown in state vectors, residuals and Jacobians: edge
/// flows first (edge order), then junction potentials (junction order).
struct Ordering {
    std::size_t edge_count = 0;
    std::size_t junction_count = 0;

    std::size_t flow(std::size_t edge) const { return edge; }
    std::size_t potential(std::size_t junction) const { return edge_count + junction; }
    std::size_t size() const { return edge_count + junction_count; }
};

Ordering ordering(const Network& network);

}  // namespace gasnet
