#include "gasnet/residual.hpp"

#include <Eigen/OrderingMethods>
#include <Eigen/SparseLU>
#include <cmath>
#include <string>

namespace gasnet {

namespace {

void check_dimension(const Network& network, const StateVector& x) {
    const auto expected = ordering(network).size();
    if (static_cast<std::size_t>(x.size()) != expected) {
        throw DimensionMismatch("state has " + std::to_string(x.size()) + " entries, network needs " +
                                std::to_string(expected));
    }
}

}  // namespace

RowLayout row_layout(const Network& network) {
    RowLayout layout;
    layout.edge_row.resize(network.edge_count());
    layout.junction_row.resize(network.junction_count());
    std::size_t next = 0;
    for (bool pipes : {true, false}) {
        for (std::size_t e = 0; e < network.edge_count(); ++e) {
            if (network.edge(e).is_pipe() == pipes) layout.edge_row[e] = next++;
        }
    }
    for (bool slack : {false, true}) {
        for (std::size_t i = 0; i < network.junction_count(); ++i) {
            if (network.junction(i).is_slack() == slack) layout.junction_row[i] = next++;
        }
    }
    return layout;
}

Eigen::SparseMatrix<double> SparseMatrix::to_eigen() const {
    const auto n = static_cast<Eigen::Index>(dim);
    Eigen::SparseMatrix<double> m(n, n);
    m.setFromTriplets(entries.begin(), entries.end());
    return m;
}

double SparseMatrix::coeff(std::size_t row, std::size_t col) const {
    double sum = 0.0;
    for (const auto& t : entries) {
        if (static_cast<std::size_t>(t.row()) == row && static_cast<std::size_t>(t.col()) == col) sum += t.value();
    }
    return sum;
}

Eigen::VectorXd assemble_residual(const Network& network, const StateVector& x, double s) {
    check_dimension(network, x);
    const auto ord = ordering(network);
    const auto rows = row_layout(network);
    Eigen::VectorXd f(static_cast<Eigen::Index>(ord.size()));

    for (std::size_t e = 0; e < network.edge_count(); ++e) {
        const auto& edge = network.edge(e);
        const double pi_from = x[ord.potential(edge.from)];
        const double pi_to = x[ord.potential(edge.to)];
        if (edge.is_pipe()) {
            const double phi = x[ord.flow(e)];
            f[rows.edge_row[e]] = pi_from - pi_to - edge.beta() * phi * std::pow(std::abs(phi), s);
        } else {
            f[rows.edge_row[e]] = edge.gamma * pi_from - pi_to;
        }
    }

    for (std::size_t i = 0; i < network.junction_count(); ++i) {
        const auto& j = network.junction(i);
        const auto row = rows.junction_row[i];
        if (j.is_slack()) {
            f[row] = x[ord.potential(i)] - j.potential();
            continue;
        }
        double net_inflow = 0.0;
        for (auto e : network.incident_edges(i)) {
            const auto& edge = network.edge(e);
            if (edge.to == i) net_inflow += x[ord.flow(e)];
            if (edge.from == i) net_inflow -= x[ord.flow(e)];
        }
        f[row] = net_inflow - j.withdrawal();
    }
    return f;
}

SparseMatrix assemble_jacobian(const Network& network, const StateVector& x, double s, double eps) {
    check_dimension(network, x);
    const auto ord = ordering(network);
    const auto rows = row_layout(network);
    SparseMatrix jac;
    jac.dim = ord.size();
    jac.entries.reserve(4 * network.edge_count() + 2 * network.edge_count() + network.junction_count());

    auto add = [&](std::size_t row, std::size_t col, double value) {
        jac.entries.emplace_back(static_cast<int>(row), static_cast<int>(col), value);
    };

    for (std::size_t e = 0; e < network.edge_count(); ++e) {
        const auto& edge = network.edge(e);
        const auto row = rows.edge_row[e];
        if (edge.is_pipe()) {
            const double magnitude = std::max(std::abs(x[ord.flow(e)]), eps);
            add(row, ord.flow(e), -edge.beta() * (1.0 + s) * std::pow(magnitude, s));
            add(row, ord.potential(edge.from), 1.0);
        } else {
            add(row, ord.potential(edge.from), edge.gamma);
        }
        add(row, ord.potential(edge.to), -1.0);
    }

    for (std::size_t i = 0; i < network.junction_count(); ++i) {
        const auto row = rows.junction_row[i];
        if (network.junction(i).is_slack()) {
            add(row, ord.potential(i), 1.0);
            continue;
        }
        for (auto e : network.incident_edges(i)) {
            const auto& edge = network.edge(e);
            if (edge.to == i) add(row, ord.flow(e), 1.0);
            if (edge.from == i) add(row, ord.flow(e), -1.0);
        }
    }
    return jac;
}

Eigen::VectorXd solve_sparse(const SparseMatrix& a, const Eigen::VectorXd& b) {
    if (static_cast<std::size_t>(b.size()) != a.dim) {
        throw DimensionMismatch("right-hand side does not match matrix dimension");
    }
    if (a.dim == 0) return Eigen::VectorXd();

    const Eigen::SparseMatrix<double> m = a.to_eigen();
    Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
    lu.analyzePattern(m);
    lu.factorize(m);
    if (lu.info() != Eigen::Success) {
        throw SingularMatrix("sparse LU failed: " + lu.lastErrorMessage());
    }
    Eigen::VectorXd x = lu.solve(b);
    if (lu.info() != Eigen::Success || !x.allFinite()) {
        throw SingularMatrix("sparse LU solve produced a non-finite solution");
    }

    // A numerically singular matrix can factor without a zero pivot; a
    // backward-error test catches the resulting garbage.
    Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(m.rows());
    for (Eigen::Index col = 0; col < m.outerSize(); ++col) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(m, col); it; ++it) row_sums[it.row()] += std::abs(it.value());
    }
    const double scale = row_sums.maxCoeff() * x.cwiseAbs().maxCoeff() + b.cwiseAbs().maxCoeff();
    const double backward = (m * x - b).cwiseAbs().maxCoeff();
    if (backward > 1e-8 * std::max(scale, 1e-300)) {
        throw SingularMatrix("sparse LU solution fails the backward-error check");
    }
    return x;
}

}  // namespace gasnet
