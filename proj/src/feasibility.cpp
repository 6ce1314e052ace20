#include "gasnet/feasibility.hpp"

#include <sstream>

namespace gasnet {

const char* to_string(Feasibility overall) {
    switch (overall) {
        case Feasibility::feasible: return "Feasible";
        case Feasibility::infeasible: return "Infeasible";
        case Feasibility::no_pressure_solution: return "NoPressureSolution";
    }
    return "Unknown";
}

FeasibilityReport classify(const Network& network, const StateVector& solution) {
    const auto ord = ordering(network);
    if (static_cast<std::size_t>(solution.size()) != ord.size()) {
        throw DimensionMismatch("classify: solution size does not match network");
    }

    FeasibilityReport report;
    bool missing_pressure = false;
    bool negative = false;

    for (std::size_t i = 0; i < network.junction_count(); ++i) {
        NodeRecovery node{i, solution[ord.potential(i)], std::nullopt, false};
        const auto& id = network.junction(i).id;
        if (const auto p = pressure_from_potential(network.eos(), node.potential)) {
            node.pressure = p->value;
            node.generalized_only = p->generalized_only;
            if (p->value < 0.0) {
                negative = true;
                std::ostringstream os;
                os << "node " << id << " pressure " << p->value << " is negative";
                report.reasons.push_back(os.str());
            }
        } else {
            missing_pressure = true;
            std::ostringstream os;
            os << "node " << id << " potential " << node.potential << " has no real pressure";
            report.reasons.push_back(os.str());
        }
        report.nodes.push_back(node);
    }

    for (std::size_t e = 0; e < network.edge_count(); ++e) {
        const auto& edge = network.edge(e);
        if (!edge.is_compressor()) continue;
        const double flow = solution[ord.flow(e)];
        const bool ok = flow >= 0.0;
        if (!ok) {
            negative = true;
            std::ostringstream os;
            os << "compressor " << network.junction(edge.from).id << " -> " << network.junction(edge.to).id
               << " flow " << flow << " is negative";
            report.reasons.push_back(os.str());
        }
        report.compressors.push_back({e, flow, ok});
    }

    if (missing_pressure) {
        report.overall = Feasibility::no_pressure_solution;
    } else if (negative) {
        report.overall = Feasibility::infeasible;
    }
    return report;
}

}  // namespace gasnet
