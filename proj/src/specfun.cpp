#include "abfringe/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace abfringe::specfun {

namespace {

using real = long double;

constexpr real kEulerGamma = 0.577215664901532860606512090082402431L;
constexpr real kPi = 3.141592653589793238462643383279502884L;
constexpr real kEps = std::numeric_limits<real>::epsilon();

// Ascending series are summed in extended precision: the largest term near
// |x| = kSeriesLimit is ~1e7, so double would lose about seven digits.

real series_j0(real x) {
    const real q = -(x * x) / 4;
    real term = 1, sum = 1;
    for (int k = 1; k < 200; ++k) {
        term *= q / (real(k) * k);
        sum += term;
        if (std::fabs(term) <= kEps * std::fabs(sum) && k > x)
            break;
    }
    return sum;
}

real series_j1(real x) {
    const real q = -(x * x) / 4;
    real term = x / 2, sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= q / (real(k) * (k + 1));
        sum += term;
        if (std::fabs(term) <= kEps * std::fabs(sum) && k > x)
            break;
    }
    return sum;
}

// Y0 = (2/pi)[ln(x/2) + gamma] J0 + (2/pi) sum_{k>=1} (-1)^{k+1} H_k (x^2/4)^k / (k!)^2
real series_y0(real x) {
    const real q = -(x * x) / 4;
    real term = 1, harmonic = 0, tail = 0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (real(k) * k);
        harmonic += real(1) / k;
        const real contrib = -term * harmonic;
        tail += contrib;
        if (std::fabs(contrib) <= kEps * std::fabs(tail) && k > x)
            break;
    }
    return (2 / kPi) * ((std::log(x / 2) + kEulerGamma) * series_j0(x) + tail);
}

// Y1 = (2/pi) ln(x/2) J1 - 2/(pi x)
//      - (1/pi) sum_{k>=0} (-1)^k [psi(k+1) + psi(k+2)] (x/2)^{2k+1} / (k! (k+1)!)
real series_y1(real x) {
    const real q = -(x * x) / 4;
    real term = x / 2;
    real psi_a = -kEulerGamma;    // psi(k+1)
    real psi_b = 1 - kEulerGamma; // psi(k+2)
    real tail = term * (psi_a + psi_b);
    for (int k = 1; k < 200; ++k) {
        term *= q / (real(k) * (k + 1));
        psi_a += real(1) / k;
        psi_b += real(1) / (k + 1);
        const real contrib = term * (psi_a + psi_b);
        tail += contrib;
        if (std::fabs(contrib) <= kEps * std::fabs(tail) && k > x)
            break;
    }
    return (2 / kPi) * std::log(x / 2) * series_j1(x) - 2 / (kPi * x) - tail / kPi;
}

struct Hankel {
    real p;
    real q;
};

// P, Q of the large-argument expansion for order nu, truncated at the smallest term.
Hankel hankel_pq(int nu, real x) {
    const real mu = 4 * real(nu) * nu;
    real a = 1;
    real p = 1, q = 0;
    real prev = std::numeric_limits<real>::infinity();
    for (int k = 1; k < 100; ++k) {
        const real odd = 2 * k - 1;
        a *= (mu - odd * odd) / (k * 8 * x);
        const real mag = std::fabs(a);
        if (mag >= prev || mag <= kEps)
            break;
        prev = mag;
        // Sign pattern: P = a0 - a2 + a4 - ..., Q = a1 - a3 + a5 - ...
        const real sgn = ((k / 2) % 2 == 0) ? 1 : -1;
        if (k % 2 == 0)
            p += sgn * a;
        else
            q += sgn * a;
    }
    return {p, q};
}

real asym_j(int nu, real x) {
    const auto [p, q] = hankel_pq(nu, x);
    const real chi = x - (real(nu) / 2 + real(0.25)) * kPi;
    return std::sqrt(2 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

real asym_y(int nu, real x) {
    const auto [p, q] = hankel_pq(nu, x);
    const real chi = x - (real(nu) / 2 + real(0.25)) * kPi;
    return std::sqrt(2 / (kPi * x)) * (p * std::sin(chi) + q * std::cos(chi));
}

void require_positive_arg(double x, const char* name) {
    if (!(x > 0.0))
        throw std::domain_error(std::string(name) + ": argument must be positive");
}

} // namespace

double bessel_j0(double x) {
    const real ax = std::fabs(real(x));
    return static_cast<double>(ax <= kSeriesLimit ? series_j0(ax) : asym_j(0, ax));
}

double bessel_j1(double x) {
    const real ax = std::fabs(real(x));
    const real v = ax <= kSeriesLimit ? series_j1(ax) : asym_j(1, ax);
    return static_cast<double>(x < 0 ? -v : v);
}

double bessel_y0(double x) {
    require_positive_arg(x, "bessel_y0");
    return static_cast<double>(x <= kSeriesLimit ? series_y0(x) : asym_y(0, x));
}

double bessel_y1(double x) {
    require_positive_arg(x, "bessel_y1");
    return static_cast<double>(x <= kSeriesLimit ? series_y1(x) : asym_y(1, x));
}

} // namespace abfringe::specfun
