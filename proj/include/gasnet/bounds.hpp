#pragma once

#include <Eigen/Core>

#include "gasnet/network.hpp"

namespace gasnet {

/// paper: compressor multiplier alpha_m^|C| and pipe drop beta_m phi_m^2.
/// safe: gamma_m^|C|, which is the factor potentials actually scale by across
/// compressors, and pipe drop beta_m max(phi_m, phi_m^2), which bounds
/// beta |phi|^(1+s) for every homotopy parameter s in [0, 1].
enum class BoundsMode { paper, safe };

const char* to_string(BoundsMode mode);

/// Hypercube |x_i| < half_width that the a-priori estimate places around
/// every solution of the potential-flow system.
struct DomainBounds {
    BoundsMode mode = BoundsMode::safe;
    double beta_m = 0.0;
    double alpha_m = 1.0;
    double gamma_m = 1.0;
    double phi_m = 0.0;
    double pi_m = 0.0;
    double half_width = 0.0;

    bool contains(const Eigen::VectorXd& x) const { return x.size() == 0 || x.cwiseAbs().maxCoeff() < half_width; }
    /// Closed box with a relative allowance for rounding. Degenerate data
    /// (e.g. zero withdrawals) puts solutions exactly on the boundary.
    bool encloses(const Eigen::VectorXd& x, double rel_tol = 1e-10) const {
        return x.size() == 0 || x.cwiseAbs().maxCoeff() <= half_width * (1.0 + rel_tol);
    }
};

DomainBounds compute_bounds(const Network& network, BoundsMode mode);

}  // namespace gasnet
