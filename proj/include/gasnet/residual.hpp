#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <stdexcept>
#include <vector>

#include "gasnet/network.hpp"

namespace gasnet {

/// Edge flows followed by junction potentials, laid out per ordering().
using StateVector = Eigen::VectorXd;

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Square matrix in triplet form over the unknown ordering.
struct SparseMatrix {
    std::size_t dim = 0;
    std::vector<Eigen::Triplet<double>> entries;

    Eigen::SparseMatrix<double> to_eigen() const;
    /// Value at (row, col), summing duplicates. Linear scan; for tests and dumps.
    double coeff(std::size_t row, std::size_t col) const;
};

/// Homotopy residual F(x, s). Rows follow the unknown ordering: one row per
/// edge, then one row per junction.
///   pipe (i,j):       pi_i - pi_j - beta phi |phi|^s
///   compressor (i,j): gamma pi_i - pi_j
///   non-slack i:      sum of inflows - sum of outflows - q_i
///   slack i:          pi_i - pi*_i
/// s = 1 is the steady-state potential system, s = 0 its linear relative.
/// Residual row of every equation: pipe rows, then compressor rows (edge
/// order), then non-slack balance rows, then slack rows (junction order).
struct RowLayout {
    std::vector<std::size_t> edge_row;
    std::vector<std::size_t> junction_row;
};

RowLayout row_layout(const Network& network);

Eigen::VectorXd assemble_residual(const Network& network, const StateVector& x, double s);

/// Jacobian of assemble_residual in x. The pipe flow derivative uses
/// max(|phi|, eps)^s so that it stays nonzero at phi = 0.
SparseMatrix assemble_jacobian(const Network& network, const StateVector& x, double s, double eps = 1e-12);

/// Solves A x = b with a pivoted sparse LU. Throws SingularMatrix when the
/// factorization breaks down or the solution is not usable.
Eigen::VectorXd solve_sparse(const SparseMatrix& a, const Eigen::VectorXd& b);

}  // namespace gasnet
