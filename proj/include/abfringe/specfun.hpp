#pragma once

namespace abfringe::specfun {

/// Ascending series is used for |x| <= kSeriesLimit, Hankel asymptotics beyond.
inline constexpr double kSeriesLimit = 20.0;

double bessel_j0(double x);
double bessel_j1(double x);

/// Second kind (Neumann). Throw std::domain_error for x <= 0.
double bessel_y0(double x);
double bessel_y1(double x);

} // namespace abfringe::specfun
