#pragma once

#include <cstdint>

#include "gasnet/network.hpp"

namespace gasnet {

enum class Topology { tree, mesh, cycle };

const char* to_string(Topology topology);

/// Random admissible networks for regression runs. Node k > 0 attaches to a
/// uniformly chosen earlier node; meshes add extra chords, cycles close a
/// ring through the first cycle_length nodes. Compressors are placed on
/// randomly chosen edges as long as the compressor-only subgraph stays a
/// forest with at most one slack junction per tree.
struct GeneratorOptions {
    Topology topology = Topology::tree;
    std::size_t nodes = 10;
    double compressor_fraction = 0.2;
    std::size_t slack_count = 1;
    /// mesh only: chords added on top of the spanning tree; 0 picks nodes / 5 + 1
    std::size_t extra_edges = 0;
    /// cycle only: ring length; 0 picks max(3, nodes / 2)
    std::size_t cycle_length = 0;
    EosKind eos = EosKind::ideal;
    /// Slack pressures are drawn from this range (MPa).
    double pressure_min = 4.0;
    double pressure_max = 7.0;
    double beta_min = 0.5;
    double beta_max = 2.0;
    double alpha_min = 1.1;
    double alpha_max = 2.1;
    /// Withdrawals are drawn from [withdrawal_min, withdrawal_max] / nodes,
    /// so total demand stays of order one regardless of size.
    double withdrawal_min = -0.5;
    double withdrawal_max = 2.0;
};

NetworkDescription generate_network(const GeneratorOptions& options, std::uint64_t seed);

}  // namespace gasnet
