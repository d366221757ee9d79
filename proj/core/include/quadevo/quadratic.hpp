#pragma once

#include <optional>

namespace quadevo {

/// A real quadratic a·x² + n·x + m. The leading coefficient must be nonzero.
/// Known roots may be attached and are validated against the coefficients.
struct Quadratic {
    double a_coef = 1.0;
    double n_coef = 0.0;
    double m_coef = 0.0;
    std::optional<double> root1;
    std::optional<double> root2;
    bool solved = false;

    /// Throws std::invalid_argument when a == 0.
    Quadratic(double a, double n, double m);

    /// Attaches known roots; throws std::invalid_argument unless both satisfy
    /// |a·r² + n·r + m| <= 1e-9 · max(1, |m|).
    void set_roots(double r1, double r2);

    /// Signed value of a·x² + n·x + m.
    double residual(double x) const;
};

/// |f(x)| of a candidate root; zero exactly when x is a root. Lower is better.
double fitness(double x, const Quadratic& q);

} // namespace quadevo
