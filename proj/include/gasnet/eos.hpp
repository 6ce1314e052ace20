#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

namespace gasnet {

enum class EosKind { ideal, cnga };

/// Equation-of-state parameters. Pressures are in MPa; b2 is per-MPa.
struct EosParams {
    EosKind kind = EosKind::ideal;
    double b1 = 1.003;
    double b2 = 2.968e-2;

    static EosParams ideal() { return {}; }
    /// Throws std::invalid_argument unless b1 > 0 and b2 > 0.
    static EosParams cnga(double b1 = 1.003, double b2 = 2.968e-2);

    bool operator==(const EosParams&) const = default;
};

const char* to_string(EosKind kind);
std::optional<EosKind> eos_kind_from_string(const char* name);

/// Potential pi(p): p^2/2 for the ideal gas, b1 p^2/2 + b2 p^3/3 for CNGA.
/// Any real p is accepted.
double potential(const EosParams& eos, double p);

struct PressureRecovery {
    double value = 0.0;
    /// Set when the recovered pressure is a real root but not a physical
    /// (non-negative) one.
    bool generalized_only = false;
};

/// Inverts the potential. Returns std::nullopt when no real pressure exists
/// (ideal gas with negative potential). For CNGA every potential has a real
/// pressure: the non-negative root when pi >= 0, otherwise the unique real
/// root, which is negative and flagged generalized_only.
std::optional<PressureRecovery> pressure_from_potential(const EosParams& eos, double pi);

/// Potential ratio of a compressor with pressure ratio alpha.
double gamma_from_alpha(double alpha);

/// Effective CNGA compressor ratio sqrt(pi(alpha p) / pi(p)) for inlet
/// pressure p > 0. Throws std::domain_error for p <= 0.
double alpha_cnga(const EosParams& eos, double alpha, double p);

struct SweepGrid {
    double p_min = 0.1;
    double p_max = 10.0;
    double alpha_min = 1.1;
    double alpha_max = 2.1;
    std::size_t p_count = 100;
    std::size_t alpha_count = 100;
};

struct SweepRow {
    double p = 0.0;
    double alpha = 0.0;
    double alpha_cnga = 0.0;
    double abs_err = 0.0;
};

/// Rows are ordered with pressure as the outer index and alpha as the inner.
struct SweepTable {
    SweepGrid grid;
    std::vector<SweepRow> rows;
    double max_abs_err = 0.0;
    double max_rel_err = 0.0;
    double argmax_p = 0.0;
    double argmax_alpha = 0.0;

    const SweepRow& at(std::size_t p_index, std::size_t alpha_index) const {
        return rows[p_index * grid.alpha_count + alpha_index];
    }
};

/// Evaluates alpha_cnga on a rectangular grid. Throws std::domain_error for
/// non-positive pressures or ratios and std::invalid_argument for grid
/// counts below 2.
SweepTable alpha_error_sweep(const EosParams& eos, const SweepGrid& grid);

/// CSV with header `p_mpa,alpha,alpha_cnga,abs_err` followed by summary
/// comment lines.
void write_sweep_csv(std::ostream& out, const SweepTable& table);

}  // namespace gasnet
