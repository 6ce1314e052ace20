#include "gasnet/eos.hpp"

#include <cmath>
#include <cstring>
#include <iomanip>
#include <limits>
#include <stdexcept>

namespace gasnet {

EosParams EosParams::cnga(double b1, double b2) {
    if (!(b1 > 0.0) || !(b2 > 0.0)) {
        throw std::invalid_argument("cnga: b1 and b2 must be positive");
    }
    return {EosKind::cnga, b1, b2};
}

const char* to_string(EosKind kind) {
    return kind == EosKind::ideal ? "ideal" : "cnga";
}

std::optional<EosKind> eos_kind_from_string(const char* name) {
    if (std::strcmp(name, "ideal") == 0) return EosKind::ideal;
    if (std::strcmp(name, "cnga") == 0) return EosKind::cnga;
    return std::nullopt;
}

double potential(const EosParams& eos, double p) {
    if (eos.kind == EosKind::ideal) {
        return 0.5 * p * p;
    }
    return p * p * (0.5 * eos.b1 + eos.b2 * p / 3.0);
}

namespace {

// Root of b2 p^3/3 + b1 p^2/2 = pi inside [lo, hi], where the cubic is
// increasing and changes sign. Newton steps that leave the bracket fall back
// to bisection.
double invert_cnga_on_bracket(const EosParams& eos, double pi, double lo, double hi, double start) {
    auto f = [&](double p) { return potential(eos, p) - pi; };
    auto df = [&](double p) { return p * (eos.b1 + eos.b2 * p); };

    double p = start;
    for (int iter = 0; iter < 400; ++iter) {
        const double fp = f(p);
        if (fp == 0.0) return p;
        if (fp < 0.0) {
            lo = p;
        } else {
            hi = p;
        }

        const double slope = df(p);
        double next = slope != 0.0 ? p - fp / slope : lo;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        if (std::abs(next - p) <= 1e-12 * std::max(1.0, std::abs(p))) {
            // one more Newton step from a point this close is quadratically exact
            const double polish_slope = df(next);
            if (polish_slope != 0.0) {
                const double polished = next - f(next) / polish_slope;
                if (std::isfinite(polished)) return polished;
            }
            return next;
        }
        if (next == lo || next == hi) return next;
        p = next;
    }
    return p;
}

}  // namespace

std::optional<PressureRecovery> pressure_from_potential(const EosParams& eos, double pi) {
    if (eos.kind == EosKind::ideal) {
        if (pi < 0.0) return std::nullopt;
        return PressureRecovery{std::sqrt(2.0 * pi), false};
    }

    if (pi == 0.0) return PressureRecovery{0.0, false};

    if (pi > 0.0) {
        // b2 > 0 means the ideal-like guess over-estimates the root
        const double hi = std::sqrt(2.0 * pi / eos.b1);
        return PressureRecovery{invert_cnga_on_bracket(eos, pi, 0.0, hi, hi), false};
    }

    // pi < 0: the only real root lies left of the local maximum at -b1/b2,
    // where the cubic is increasing. For p <= -3 b1/b2 the cubic is bounded
    // above by -b1 p^2/2, which fixes the lower end of the bracket.
    const double hi = -eos.b1 / eos.b2;
    const double lo = std::min(-3.0 * eos.b1 / eos.b2, -std::sqrt(-2.0 * pi / eos.b1));
    return PressureRecovery{invert_cnga_on_bracket(eos, pi, lo, hi, lo), true};
}

double gamma_from_alpha(double alpha) { return alpha * alpha; }

double alpha_cnga(const EosParams& eos, double alpha, double p) {
    if (!(p > 0.0)) {
        throw std::domain_error("alpha_cnga: inlet pressure must be positive");
    }
    return std::sqrt(potential(eos, alpha * p) / potential(eos, p));
}

SweepTable alpha_error_sweep(const EosParams& eos, const SweepGrid& grid) {
    if (grid.p_count < 2 || grid.alpha_count < 2) {
        throw std::invalid_argument("alpha_error_sweep: grid counts must be at least 2");
    }
    if (!(grid.p_min > 0.0) || !(grid.p_max >= grid.p_min)) {
        throw std::domain_error("alpha_error_sweep: pressures must be positive");
    }
    if (!(grid.alpha_min > 0.0) || !(grid.alpha_max >= grid.alpha_min)) {
        throw std::domain_error("alpha_error_sweep: ratios must be positive");
    }

    SweepTable table;
    table.grid = grid;
    table.rows.reserve(grid.p_count * grid.alpha_count);

    const double dp = (grid.p_max - grid.p_min) / static_cast<double>(grid.p_count - 1);
    const double da = (grid.alpha_max - grid.alpha_min) / static_cast<double>(grid.alpha_count - 1);
    for (std::size_t i = 0; i < grid.p_count; ++i) {
        const double p = i + 1 == grid.p_count ? grid.p_max : grid.p_min + dp * static_cast<double>(i);
        for (std::size_t j = 0; j < grid.alpha_count; ++j) {
            const double alpha =
                j + 1 == grid.alpha_count ? grid.alpha_max : grid.alpha_min + da * static_cast<double>(j);
            const double effective = alpha_cnga(eos, alpha, p);
            const double err = std::abs(effective - alpha);
            table.rows.push_back({p, alpha, effective, err});
            if (err > table.max_abs_err || table.rows.size() == 1) {
                table.max_abs_err = err;
                table.argmax_p = p;
                table.argmax_alpha = alpha;
            }
            table.max_rel_err = std::max(table.max_rel_err, err / alpha);
        }
    }
    return table;
}

void write_sweep_csv(std::ostream& out, const SweepTable& table) {
    const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
    out << "p_mpa,alpha,alpha_cnga,abs_err\n";
    for (const auto& row : table.rows) {
        out << row.p << ',' << row.alpha << ',' << row.alpha_cnga << ',' << row.abs_err << '\n';
    }
    out << "# max_abs_err=" << table.max_abs_err << ",argmax_p=" << table.argmax_p
        << ",argmax_alpha=" << table.argmax_alpha << '\n';
    out << "# max_rel_err=" << table.max_rel_err << '\n';
    out.precision(old_precision);
}

}  // namespace gasnet
