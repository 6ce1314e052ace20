#include "gasnet/network.hpp"

#include <cmath>
#include <numeric>
#include <queue>
#include <sstream>

namespace gasnet {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // false when a and b were already joined
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

std::string describe_edge(std::size_t index, const EdgeSpec& edge) {
    std::ostringstream os;
    os << "edge " << index << " (" << edge.from << " -> " << edge.to << ")";
    return os.str();
}

std::string format_violations(const std::vector<Violation>& violations) {
    std::ostringstream os;
    os << "invalid network:";
    for (const auto& v : violations) {
        os << "\n  " << to_string(v.kind) << ": " << v.message;
    }
    return os.str();
}

}  // namespace

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::no_slack_node: return "NoSlackNode";
        case ViolationKind::compressor_only_slack_path: return "CompressorOnlySlackPath";
        case ViolationKind::compressor_only_cycle: return "CompressorOnlyCycle";
        case ViolationKind::dangling_edge: return "DanglingEdge";
        case ViolationKind::duplicate_id: return "DuplicateId";
        case ViolationKind::non_positive_resistance: return "NonPositiveResistance";
        case ViolationKind::compressor_ratio_below_one: return "CompressorRatioBelowOne";
        case ViolationKind::disconnected_graph: return "DisconnectedGraph";
        case ViolationKind::self_loop: return "SelfLoop";
    }
    return "Unknown";
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(format_violations(violations)), violations_(std::move(violations)) {}

Network Network::build(const NetworkDescription& description) {
    Network net;
    net.eos_ = description.eos;
    net.junctions_.reserve(description.junctions.size());

    std::vector<Violation> violations;
    for (const auto& spec : description.junctions) {
        auto [it, inserted] = net.index_.emplace(spec.id, net.junctions_.size());
        if (!inserted) {
            violations.push_back({ViolationKind::duplicate_id, "junction id '" + spec.id + "' is repeated"});
            continue;
        }
        net.junctions_.push_back({spec.id, spec.kind, spec.boundary});
    }

    net.incidence_.resize(net.junctions_.size());
    for (std::size_t e = 0; e < description.edges.size(); ++e) {
        const auto& spec = description.edges[e];
        auto from = net.index_.find(spec.from);
        auto to = net.index_.find(spec.to);
        if (from == net.index_.end() || to == net.index_.end()) {
            violations.push_back({ViolationKind::dangling_edge, describe_edge(e, spec) + " references an unknown junction"});
            continue;
        }
        Edge edge{from->second, to->second, spec.device, 0.0};
        if (edge.is_compressor()) edge.gamma = gamma_from_alpha(edge.alpha());
        net.incidence_[edge.from].push_back(net.edges_.size());
        if (edge.to != edge.from) net.incidence_[edge.to].push_back(net.edges_.size());
        net.edges_.push_back(std::move(edge));
    }

    if (!violations.empty()) throw ValidationError(std::move(violations));
    return net;
}

Network Network::unchecked(const NetworkDescription& description) { return build(description); }

Network Network::from(const NetworkDescription& description) {
    auto result = validate(description);
    if (!result.ok()) throw ValidationError(std::move(result.violations));
    return std::move(*result.network);
}

std::size_t Network::pipe_count() const {
    std::size_t n = 0;
    for (const auto& e : edges_) n += e.is_pipe() ? 1 : 0;
    return n;
}

std::size_t Network::compressor_count() const { return edges_.size() - pipe_count(); }

std::optional<std::size_t> Network::find_junction(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Network::other_end(std::size_t edge, std::size_t junction) const {
    const auto& e = edges_[edge];
    return e.from == junction ? e.to : e.from;
}

std::vector<std::size_t> Network::slack_junctions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < junctions_.size(); ++i) {
        if (junctions_[i].is_slack()) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> Network::component_labels() const {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(junctions_.size(), unset);
    std::size_t next = 0;
    for (std::size_t root = 0; root < junctions_.size(); ++root) {
        if (label[root] != unset) continue;
        std::queue<std::size_t> frontier;
        frontier.push(root);
        label[root] = next;
        while (!frontier.empty()) {
            const auto v = frontier.front();
            frontier.pop();
            for (auto e : incidence_[v]) {
                const auto w = other_end(e, v);
                if (label[w] == unset) {
                    label[w] = next;
                    frontier.push(w);
                }
            }
        }
        ++next;
    }
    return label;
}

NetworkDescription Network::description() const {
    NetworkDescription d;
    d.eos = eos_;
    for (const auto& j : junctions_) d.junctions.push_back({j.id, j.kind, j.boundary});
    for (const auto& e : edges_) d.edges.push_back({junctions_[e.from].id, junctions_[e.to].id, e.device});
    return d;
}

bool Network::operator==(const Network& other) const { return description() == other.description(); }

ValidationResult validate(const NetworkDescription& description) {
    ValidationResult result;
    auto& violations = result.violations;

    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < description.junctions.size(); ++i) {
        const auto& id = description.junctions[i].id;
        if (!index.emplace(id, i).second) {
            violations.push_back({ViolationKind::duplicate_id, "junction id '" + id + "' is repeated"});
        }
    }

    const std::size_t n = description.junctions.size();
    DisjointSets all_edges(n);
    DisjointSets compressor_edges(n);

    for (std::size_t e = 0; e < description.edges.size(); ++e) {
        const auto& spec = description.edges[e];
        const auto from = index.find(spec.from);
        const auto to = index.find(spec.to);
        const bool resolved = from != index.end() && to != index.end();
        if (!resolved) {
            violations.push_back({ViolationKind::dangling_edge, describe_edge(e, spec) + " references an unknown junction"});
        }

        if (const auto* pipe = std::get_if<Pipe>(&spec.device)) {
            if (!(pipe->beta > 0.0) || !std::isfinite(pipe->beta)) {
                violations.push_back({ViolationKind::non_positive_resistance, describe_edge(e, spec) + " has resistance <= 0"});
            }
        } else {
            const auto& comp = std::get<Compressor>(spec.device);
            if (!(comp.alpha >= 1.0) || !std::isfinite(comp.alpha)) {
                violations.push_back({ViolationKind::compressor_ratio_below_one, describe_edge(e, spec) + " has ratio < 1"});
            }
        }

        if (!resolved) continue;
        if (from->second == to->second) {
            violations.push_back({ViolationKind::self_loop, describe_edge(e, spec) + " is a self-loop"});
        }
        all_edges.unite(from->second, to->second);
        if (std::holds_alternative<Compressor>(spec.device) && !compressor_edges.unite(from->second, to->second)) {
            violations.push_back({ViolationKind::compressor_only_cycle, describe_edge(e, spec) + " closes a cycle of compressors"});
        }
    }

    std::vector<std::size_t> slack_per_compressor_group(n, 0);
    std::vector<std::size_t> slack_per_component(n, 0);
    std::size_t slack_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!description.junctions[i].is_slack() || index.at(description.junctions[i].id) != i) continue;
        ++slack_count;
        ++slack_per_component[all_edges.find(i)];
        if (++slack_per_compressor_group[compressor_edges.find(i)] == 2) {
            violations.push_back({ViolationKind::compressor_only_slack_path,
                                  "slack junction '" + description.junctions[i].id +
                                      "' reaches another slack junction through compressors only"});
        }
    }

    if (slack_count == 0) {
        violations.push_back({ViolationKind::no_slack_node, "network has no slack junction"});
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            if (all_edges.find(i) == i && slack_per_component[i] == 0) {
                violations.push_back({ViolationKind::disconnected_graph,
                                      "component containing '" + description.junctions[i].id + "' has no slack junction"});
            }
        }
    }

    if (violations.empty()) result.network = Network::unchecked(description);
    return result;
}

Ordering ordering(const Network& network) { return {network.edge_count(), network.junction_count()}; }

}  // namespace gasnet
