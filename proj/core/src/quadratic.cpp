#include "quadevo/quadratic.hpp"

#include <cmath>
#include <stdexcept>

namespace quadevo {

Quadratic::Quadratic(double a, double n, double m) : a_coef(a), n_coef(n), m_coef(m) {
    if (a == 0.0) {
        throw std::invalid_argument("Quadratic: leading coefficient must be nonzero");
    }
}

double Quadratic::residual(double x) const {
    return a_coef * x * x + n_coef * x + m_coef;
}

void Quadratic::set_roots(double r1, double r2) {
    const double bound = 1e-9 * std::max(1.0, std::abs(m_coef));
    if (std::abs(residual(r1)) > bound || std::abs(residual(r2)) > bound) {
        throw std::invalid_argument("Quadratic: claimed roots do not satisfy the equation");
    }
    root1 = r1;
    root2 = r2;
}

double fitness(double x, const Quadratic& q) {
    return std::abs(q.residual(x));
}

} // namespace quadevo
