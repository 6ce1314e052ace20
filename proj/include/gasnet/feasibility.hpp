#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gasnet/residual.hpp"

namespace gasnet {

enum class Feasibility { feasible, infeasible, no_pressure_solution };

const char* to_string(Feasibility overall);

struct NodeRecovery {
    std::size_t junction = 0;
    double potential = 0.0;
    std::optional<double> pressure;  ///< empty when no real pressure exists
    bool generalized_only = false;
};

struct CompressorCheck {
    std::size_t edge = 0;
    double flow = 0.0;
    bool sign_ok = true;
};

struct FeasibilityReport {
    Feasibility overall = Feasibility::feasible;
    std::vector<NodeRecovery> nodes;
    std::vector<CompressorCheck> compressors;
    std::vector<std::string> reasons;
};

/// Recovers pressures from a generalized potential solution and checks the
/// physical sign conditions: every pressure >= 0 and every compressor flow
/// >= 0. For the ideal gas a negative potential has no real pressure and the
/// result is no_pressure_solution; for CNGA every potential has a real
/// pressure, so the result is either feasible or infeasible.
/// Throws DimensionMismatch when the solution does not fit the network.
FeasibilityReport classify(const Network& network, const StateVector& solution);

}  // namespace gasnet
