#include "gasnet/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace gasnet {

const char* to_string(BoundsMode mode) { return mode == BoundsMode::paper ? "paper" : "safe"; }

DomainBounds compute_bounds(const Network& network, BoundsMode mode) {
    DomainBounds b;
    b.mode = mode;

    double max_withdrawal = 0.0;
    double max_slack_potential = 0.0;
    std::size_t nonslack = 0;
    for (const auto& j : network.junctions()) {
        if (j.is_slack()) {
            max_slack_potential = std::max(max_slack_potential, std::abs(j.potential()));
        } else {
            max_withdrawal = std::max(max_withdrawal, std::abs(j.withdrawal()));
            ++nonslack;
        }
    }

    std::size_t pipes = 0;
    std::size_t compressors = 0;
    for (const auto& e : network.edges()) {
        if (e.is_pipe()) {
            b.beta_m = std::max(b.beta_m, e.beta());
            ++pipes;
        } else {
            // first compressor replaces the identity default
            b.alpha_m = compressors == 0 ? e.alpha() : std::max(b.alpha_m, e.alpha());
            b.gamma_m = compressors == 0 ? e.gamma : std::max(b.gamma_m, e.gamma);
            ++compressors;
        }
    }

    b.phi_m = max_withdrawal * static_cast<double>(nonslack);
    const double flow_term = mode == BoundsMode::paper ? b.phi_m * b.phi_m : std::max(b.phi_m, b.phi_m * b.phi_m);
    const double pipe_drop = static_cast<double>(pipes) * b.beta_m * flow_term;
    const double ratio = mode == BoundsMode::paper ? b.alpha_m : b.gamma_m;
    const double multiplier = compressors == 0 ? 1.0 : std::pow(ratio, static_cast<double>(compressors));
    b.pi_m = (max_slack_potential + pipe_drop) * multiplier;
    b.half_width = std::max(b.phi_m, b.pi_m);
    return b;
}

}  // namespace gasnet
