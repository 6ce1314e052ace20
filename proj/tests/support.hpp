#pragma once

#include <Eigen/Core>
#include <string>

#include "gasnet/network.hpp"

namespace gasnet::testing {

inline JunctionSpec slack(const std::string& id, double pi) { return {id, JunctionKind::slack, pi}; }
inline JunctionSpec demand(const std::string& id, double q) { return {id, JunctionKind::nonslack, q}; }
inline EdgeSpec pipe(const std::string& from, const std::string& to, double beta) { return {from, to, Pipe{beta}}; }
inline EdgeSpec compressor(const std::string& from, const std::string& to, double alpha) {
    return {from, to, Compressor{alpha}};
}

// slack n1 (pi = 2) -> pipe (beta = 1) -> n2 (q = 2)
inline NetworkDescription single_pipe(EosParams eos = EosParams::ideal()) {
    return {eos, {slack("n1", 2.0), demand("n2", 2.0)}, {pipe("n1", "n2", 1.0)}};
}

// slack n1 (pi = 1) -> compressor (alpha = 2) -> n2 -> pipe (beta = 1) -> n3 (q = 1)
inline NetworkDescription chain3(EosParams eos = EosParams::ideal()) {
    return {eos,
            {slack("n1", 1.0), demand("n2", 0.0), demand("n3", 1.0)},
            {compressor("n1", "n2", 2.0), pipe("n2", "n3", 1.0)}};
}

// slack n1 (pi = 10), pipes 1-2 (beta 1), 2-3 (beta 2), 1-3 (beta 1), q2 = q3 = 1
inline NetworkDescription cycle3() {
    return {EosParams::ideal(),
            {slack("n1", 10.0), demand("n2", 1.0), demand("n3", 1.0)},
            {pipe("n1", "n2", 1.0), pipe("n2", "n3", 2.0), pipe("n1", "n3", 1.0)}};
}

inline double max_abs(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace gasnet::testing
