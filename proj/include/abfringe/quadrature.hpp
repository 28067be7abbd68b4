#pragma once

#include <cstddef>
#include <functional>

namespace abfringe::quad {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_depth = 60;         // bisection levels below the original interval
    double min_interval = 1e-12; // smallest subinterval, as a fraction of (b - a)

    /// Throws abfringe::InvalidInput on non-positive tolerances or max_depth < 1.
    void validate() const;
};

struct QuadratureOutcome {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (10/21-point) integration on [a, b].
///
/// The interval with the largest error estimate is bisected until the summed
/// estimate falls below max(abs_tol, rel_tol * |value|). When no interval can be
/// bisected further (depth or width limit) the best value is returned with
/// converged = false. a == b yields 0.
QuadratureOutcome integrate_adaptive(const Integrand& f, double a, double b,
                                     const QuadratureSpec& spec = {});

/// Composite trapezoid rule with n_steps equal panels. Deterministic.
double integrate_fixed_trapezoid(const Integrand& f, double a, double b, long n_steps);

} // namespace abfringe::quad
