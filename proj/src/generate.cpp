#include "gasnet/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace gasnet {

namespace {

// Draws are built directly on the engine output so that a seed produces the
// same network with every standard library.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * unit;
    }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
    bool coin() { return (engine_() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

struct GroupSets {
    explicit GroupSets(std::size_t n) : parent(n), slacks(n, 0) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    std::vector<std::size_t> parent;
    std::vector<std::size_t> slacks;
};

}  // namespace

const char* to_string(Topology topology) {
    switch (topology) {
        case Topology::tree: return "tree";
        case Topology::mesh: return "mesh";
        case Topology::cycle: return "cycle";
    }
    return "unknown";
}

NetworkDescription generate_network(const GeneratorOptions& options, std::uint64_t seed) {
    const std::size_t n = options.nodes;
    const std::size_t min_nodes = options.topology == Topology::cycle ? 3 : 2;
    if (n < min_nodes) throw std::invalid_argument("generate_network: too few nodes");
    if (options.slack_count < 1 || options.slack_count > n) {
        throw std::invalid_argument("generate_network: slack_count must lie in [1, nodes]");
    }

    Draw draw(seed);
    std::vector<std::pair<std::size_t, std::size_t>> links;
    std::set<std::pair<std::size_t, std::size_t>> present;
    auto link = [&](std::size_t a, std::size_t b) {
        links.emplace_back(a, b);
        present.emplace(std::min(a, b), std::max(a, b));
    };

    std::size_t first_free = 1;
    if (options.topology == Topology::cycle) {
        const std::size_t ring = std::min(n, options.cycle_length ? std::max<std::size_t>(options.cycle_length, 3)
                                                                  : std::max<std::size_t>(3, n / 2));
        for (std::size_t k = 0; k + 1 < ring; ++k) link(k, k + 1);
        link(ring - 1, 0);
        first_free = ring;
    }
    for (std::size_t k = first_free; k < n; ++k) link(draw.index(k), k);

    if (options.topology == Topology::mesh) {
        const std::size_t chords = options.extra_edges ? options.extra_edges : n / 5 + 1;
        for (std::size_t added = 0, attempts = 0; added < chords && attempts < 50 * chords; ++attempts) {
            const auto a = draw.index(n);
            const auto b = draw.index(n);
            if (a == b || present.count({std::min(a, b), std::max(a, b)})) continue;
            link(a, b);
            ++added;
        }
    }

    NetworkDescription net;
    net.eos = options.eos == EosKind::cnga ? EosParams::cnga() : EosParams::ideal();

    std::vector<bool> slack(n, false);
    slack[0] = true;
    for (std::size_t placed = 1; placed < options.slack_count;) {
        const auto k = draw.index(n);
        if (!slack[k]) {
            slack[k] = true;
            ++placed;
        }
    }

    for (std::size_t k = 0; k < n; ++k) {
        JunctionSpec j;
        j.id = "n" + std::to_string(k);
        if (slack[k]) {
            j.kind = JunctionKind::slack;
            j.boundary = potential(net.eos, draw.uniform(options.pressure_min, options.pressure_max));
        } else {
            j.boundary = draw.uniform(options.withdrawal_min, options.withdrawal_max) / static_cast<double>(n);
        }
        net.junctions.push_back(std::move(j));
    }

    // Compressor placement keeps the compressor-only subgraph a forest with
    // at most one slack junction per tree.
    std::vector<bool> is_compressor(links.size(), false);
    const auto target = static_cast<std::size_t>(options.compressor_fraction * static_cast<double>(links.size()));
    std::vector<std::size_t> candidates(links.size());
    std::iota(candidates.begin(), candidates.end(), 0);
    for (std::size_t k = candidates.size(); k > 1; --k) std::swap(candidates[k - 1], candidates[draw.index(k)]);

    GroupSets groups(n);
    for (std::size_t k = 0; k < n; ++k) groups.slacks[k] = slack[k] ? 1 : 0;
    std::size_t placed = 0;
    for (auto e : candidates) {
        if (placed >= target) break;
        const auto a = groups.find(links[e].first);
        const auto b = groups.find(links[e].second);
        if (a == b || groups.slacks[a] + groups.slacks[b] > 1) continue;
        groups.parent[b] = a;
        groups.slacks[a] += groups.slacks[b];
        is_compressor[e] = true;
        ++placed;
    }

    for (std::size_t e = 0; e < links.size(); ++e) {
        auto [a, b] = links[e];
        if (draw.coin()) std::swap(a, b);
        EdgeSpec edge{net.junctions[a].id, net.junctions[b].id, Pipe{}};
        if (is_compressor[e]) {
            edge.device = Compressor{draw.uniform(options.alpha_min, options.alpha_max)};
        } else {
            edge.device = Pipe{draw.uniform(options.beta_min, options.beta_max)};
        }
        net.edges.push_back(std::move(edge));
    }
    return net;
}

}  // namespace gasnet
