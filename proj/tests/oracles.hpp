#pragma once

// Test-only reference computations. Nothing here calls into the library's
// special-function or quadrature code.

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

using real = long double;
inline constexpr real kPi = 3.141592653589793238462643383279502884L;

// Composite Simpson in extended precision, n even.
inline real simpson(const std::function<real(real)>& f, real a, real b, long n) {
    if (n % 2)
        ++n;
    const real h = (b - a) / n;
    real s = f(a) + f(b);
    for (long i = 1; i < n; ++i)
        s += f(a + h * i) * (i % 2 ? 4 : 2);
    return s * h / 3;
}

// Plain composite trapezoid in double, independent of the library's implementation.
inline double trapezoid(const std::function<double(double)>& f, double a, double b, long n) {
    const double h = (b - a) / static_cast<double>(n);
    long double s = 0.5L * (f(a) + f(b));
    for (long i = 1; i < n; ++i)
        s += f(a + h * static_cast<double>(i));
    return static_cast<double>(s * h);
}

// Ascending power series for J1, each term built from scratch with lgamma so
// that no recurrence is shared with the library.
inline double j1_series(double x) {
    const real hx = std::fabs(static_cast<real>(x)) / 2;
    real sum = 0;
    for (int k = 0; k < 120; ++k) {
        const real log_mag = (2 * k + 1) * std::log(hx) - std::lgamma(real(k + 1)) -
                             std::lgamma(real(k + 2));
        const real term = std::exp(log_mag);
        sum += (k % 2 ? -term : term);
        if (term < 1e-30L * std::fabs(sum) && k > hx * hx)
            break;
    }
    return static_cast<double>(x < 0 ? -sum : sum);
}

// Bessel's integral: J_n(x) = (1/2pi) int_0^2pi cos(n t - x sin t) dt. The integrand
// is periodic and analytic, so the equally spaced rule converges geometrically.
inline double jn_integral(int n, double x) {
    const int m = 400;
    real s = 0;
    for (int i = 0; i < m; ++i) {
        const real t = 2 * kPi * i / m;
        s += std::cos(n * t - static_cast<real>(x) * std::sin(t));
    }
    return static_cast<double>(s / m);
}

// Y_n(x) = (1/pi) int_0^pi sin(x sin t - n t) dt
//        - (1/pi) int_0^inf (e^{nt} + (-1)^n e^{-nt}) e^{-x sinh t} dt
inline double yn_integral(int n, double x) {
    const real xl = x;
    const real first = simpson([&](real t) { return std::sin(xl * std::sin(t) - n * t); }, 0, kPi,
                               400000);
    const real sgn = (n % 2) ? -1 : 1;
    const real t_max = std::asinh(60.0L / xl) + 1;
    const real second = simpson(
        [&](real t) { return (std::exp(n * t) + sgn * std::exp(-n * t)) * std::exp(-xl * std::sinh(t)); },
        0, t_max, 400000);
    return static_cast<double>((first - second) / kPi);
}

// Time-domain phase bracket for the upper branch by brute force: sums
// (theta_hat . v) cos(w t) / r over a fine grid on each leg, with r and the
// projection built from raw coordinates. Returns the bracket B such that
// phi_U = (q lambda Phi_s / 2 pi hbar) B.
inline double bracket_time_domain(double l1, double l2, double b, double ts, double td,
                                  double omega, long n_per_leg) {
    auto leg = [&](double x0, double y0, double vx, double vy, double t0, double t1) {
        return trapezoid(
            [&](double t) {
                const double tau = t - t0;
                const double x = x0 + vx * tau;
                const double y = y0 + vy * tau;
                const double r2 = x * x + y * y;
                return std::cos(omega * t) * (x * vy - y * vx) / r2;
            },
            t0, t1, n_per_leg);
    };
    return leg(-l1, 0.0, l1 / ts, b / ts, -ts, 0.0) + leg(0.0, b, l2 / td, -b / td, 0.0, td);
}

// f(x) = (4/pi) cos(x/2) int_0^1 cos(x y/2)/(1+y^2) dy by trapezoid.
inline double f_ratio_trapezoid(double x, long n = 1'000'000) {
    const double integral =
        trapezoid([x](double y) { return std::cos(0.5 * x * y) / (1.0 + y * y); }, 0.0, 1.0, n);
    return 4.0 / std::numbers::pi * std::cos(0.5 * x) * integral;
}

} // namespace oracle
