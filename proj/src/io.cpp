#include "gasnet/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace gasnet {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(where + ": missing \"" + key + "\"");
    return *it;
}

double require_number(const json& obj, const char* key, const std::string& where) {
    const auto& v = require(obj, key, where);
    if (!v.is_number()) throw SchemaError(where + ": \"" + key + "\" must be a number");
    return v.get<double>();
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
    const auto& v = require(obj, key, where);
    if (!v.is_string()) throw SchemaError(where + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

NetworkDescription network_from_json(const json& doc) {
    if (!doc.is_object()) throw SchemaError("network: document must be an object");
    NetworkDescription net;

    const auto eos_name = require_string(doc, "eos", "network");
    const auto kind = eos_kind_from_string(eos_name.c_str());
    if (!kind) throw SchemaError("network: unknown eos \"" + eos_name + "\"");
    if (*kind == EosKind::cnga) {
        const double b1 = doc.contains("b1") ? require_number(doc, "b1", "network") : EosParams{}.b1;
        const double b2 = doc.contains("b2") ? require_number(doc, "b2", "network") : EosParams{}.b2;
        try {
            net.eos = EosParams::cnga(b1, b2);
        } catch (const std::invalid_argument& e) {
            throw SchemaError(std::string("network: ") + e.what());
        }
    }

    const auto& nodes = require(doc, "nodes", "network");
    if (!nodes.is_array()) throw SchemaError("network: \"nodes\" must be an array");
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const auto& node = nodes[k];
        const std::string where = "nodes[" + std::to_string(k) + "]";
        if (!node.is_object()) throw SchemaError(where + ": must be an object");
        JunctionSpec j;
        j.id = require_string(node, "id", where);
        const auto& slack = require(node, "slack", where);
        if (!slack.is_boolean()) throw SchemaError(where + ": \"slack\" must be a boolean");
        j.kind = slack.get<bool>() ? JunctionKind::slack : JunctionKind::nonslack;

        const bool has_potential = node.contains("potential");
        const bool has_pressure = node.contains("pressure");
        const bool has_withdrawal = node.contains("withdrawal");
        if (j.is_slack()) {
            if (has_withdrawal || has_potential == has_pressure) {
                throw SchemaError(where + ": slack node needs exactly one of \"potential\" or \"pressure\"");
            }
            j.boundary = has_potential ? require_number(node, "potential", where)
                                       : potential(net.eos, require_number(node, "pressure", where));
        } else {
            if (has_potential || has_pressure) {
                throw SchemaError(where + ": non-slack node cannot carry a potential or pressure");
            }
            j.boundary = require_number(node, "withdrawal", where);
        }
        net.junctions.push_back(std::move(j));
    }

    const auto& edges = require(doc, "edges", "network");
    if (!edges.is_array()) throw SchemaError("network: \"edges\" must be an array");
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const auto& edge = edges[k];
        const std::string where = "edges[" + std::to_string(k) + "]";
        if (!edge.is_object()) throw SchemaError(where + ": must be an object");
        EdgeSpec e;
        e.from = require_string(edge, "from", where);
        e.to = require_string(edge, "to", where);
        const auto type = require_string(edge, "type", where);
        if (type == "pipe") {
            e.device = Pipe{require_number(edge, "beta", where)};
        } else if (type == "compressor") {
            e.device = Compressor{require_number(edge, "alpha", where)};
        } else {
            throw SchemaError(where + ": unknown type \"" + type + "\"");
        }
        net.edges.push_back(std::move(e));
    }
    return net;
}

json network_to_json(const NetworkDescription& network) {
    json doc;
    doc["eos"] = to_string(network.eos.kind);
    if (network.eos.kind == EosKind::cnga) {
        doc["b1"] = network.eos.b1;
        doc["b2"] = network.eos.b2;
    }
    doc["nodes"] = json::array();
    for (const auto& j : network.junctions) {
        json node{{"id", j.id}, {"slack", j.is_slack()}};
        node[j.is_slack() ? "potential" : "withdrawal"] = j.boundary;
        doc["nodes"].push_back(std::move(node));
    }
    doc["edges"] = json::array();
    for (const auto& e : network.edges) {
        json edge{{"from", e.from}, {"to", e.to}};
        if (const auto* pipe = std::get_if<Pipe>(&e.device)) {
            edge["type"] = "pipe";
            edge["beta"] = pipe->beta;
        } else {
            edge["type"] = "compressor";
            edge["alpha"] = std::get<Compressor>(e.device).alpha;
        }
        doc["edges"].push_back(std::move(edge));
    }
    return doc;
}

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(path.string() + ": " + e.what());
    }
}

NetworkDescription read_network(const std::filesystem::path& path) { return network_from_json(read_json(path)); }

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
    if (!out) throw IoError("failed writing " + path.string());
}

json solution_to_json(const Network& network, const SolveResult& result, const FeasibilityReport* report) {
    json doc;
    doc["status"] = to_string(result.status);
    doc["residual_norm"] = number_or_null(result.residual_norm);
    doc["nodes"] = json::array();
    doc["edges"] = json::array();
    const auto ord = ordering(network);
    if (static_cast<std::size_t>(result.state.size()) != ord.size()) return doc;

    for (std::size_t i = 0; i < network.junction_count(); ++i) {
        const double pi = result.state[ord.potential(i)];
        json node{{"id", network.junction(i).id}, {"potential", pi}};
        std::optional<PressureRecovery> p;
        if (report) {
            const auto& rec = report->nodes[i];
            if (rec.pressure) p = PressureRecovery{*rec.pressure, rec.generalized_only};
        } else {
            p = pressure_from_potential(network.eos(), pi);
        }
        node["pressure"] = p ? json(p->value) : json(nullptr);
        node["generalized_only"] = p ? p->generalized_only : false;
        doc["nodes"].push_back(std::move(node));
    }
    for (std::size_t e = 0; e < network.edge_count(); ++e) {
        const auto& edge = network.edge(e);
        doc["edges"].push_back({{"from", network.junction(edge.from).id},
                                {"to", network.junction(edge.to).id},
                                {"flow", result.state[ord.flow(e)]}});
    }
    if (report) {
        doc["feasibility"] = {{"overall", to_string(report->overall)}, {"reasons", report->reasons}};
    }
    return doc;
}

StateVector state_from_solution_json(const Network& network, const json& doc) {
    if (!doc.is_object()) throw SchemaError("solution: document must be an object");
    const auto ord = ordering(network);
    StateVector x = StateVector::Zero(static_cast<Eigen::Index>(ord.size()));

    const auto& nodes = require(doc, "nodes", "solution");
    const auto& edges = require(doc, "edges", "solution");
    if (!nodes.is_array() || nodes.size() != network.junction_count()) {
        throw SchemaError("solution: \"nodes\" must list every junction");
    }
    if (!edges.is_array() || edges.size() != network.edge_count()) {
        throw SchemaError("solution: \"edges\" must list every edge");
    }

    std::vector<bool> seen(network.junction_count(), false);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const std::string where = "solution.nodes[" + std::to_string(k) + "]";
        const auto id = require_string(nodes[k], "id", where);
        const auto index = network.find_junction(id);
        if (!index) throw SchemaError(where + ": unknown junction \"" + id + "\"");
        if (seen[*index]) throw SchemaError(where + ": junction \"" + id + "\" listed twice");
        seen[*index] = true;
        x[ord.potential(*index)] = require_number(nodes[k], "potential", where);
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const std::string where = "solution.edges[" + std::to_string(e) + "]";
        const auto& edge = network.edge(e);
        if (require_string(edges[e], "from", where) != network.junction(edge.from).id ||
            require_string(edges[e], "to", where) != network.junction(edge.to).id) {
            throw SchemaError(where + ": endpoints do not match the network's edge " + std::to_string(e));
        }
        x[ord.flow(e)] = require_number(edges[e], "flow", where);
    }
    return x;
}

json report_to_json(const Network& network, const FeasibilityReport& report) {
    json doc;
    doc["overall"] = to_string(report.overall);
    doc["nodes"] = json::array();
    for (const auto& n : report.nodes) {
        doc["nodes"].push_back({{"id", network.junction(n.junction).id},
                                {"potential", n.potential},
                                {"pressure", n.pressure ? json(*n.pressure) : json(nullptr)},
                                {"generalized_only", n.generalized_only}});
    }
    doc["compressors"] = json::array();
    for (const auto& c : report.compressors) {
        const auto& edge = network.edge(c.edge);
        doc["compressors"].push_back({{"from", network.junction(edge.from).id},
                                      {"to", network.junction(edge.to).id},
                                      {"flow", c.flow},
                                      {"sign_ok", c.sign_ok}});
    }
    doc["reasons"] = report.reasons;
    return doc;
}

json bounds_to_json(const DomainBounds& b) {
    return {{"mode", to_string(b.mode)}, {"beta_m", b.beta_m}, {"alpha_m", b.alpha_m},
            {"gamma_m", b.gamma_m},      {"phi_m", b.phi_m},   {"pi_m", number_or_null(b.pi_m)},
            {"L", number_or_null(b.half_width)}};
}

json violations_to_json(const std::vector<Violation>& violations) {
    json out = json::array();
    for (const auto& v : violations) out.push_back({{"kind", to_string(v.kind)}, {"message", v.message}});
    return out;
}

void write_trace_csv(std::ostream& out, const std::vector<TraceEntry>& trace) {
    const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
    out << "s,newton_iters,residual_norm\n";
    for (const auto& t : trace) out << t.s << ',' << t.newton_iters << ',' << t.residual_norm << '\n';
    out.precision(old_precision);
}

void write_jacobian_csv(std::ostream& out, const SparseMatrix& jacobian) {
    const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
    out << "row,col,value\n";
    for (const auto& t : jacobian.entries) out << t.row() << ',' << t.col() << ',' << t.value() << '\n';
    out.precision(old_precision);
}

}  // namespace gasnet
