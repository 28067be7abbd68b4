#include "abfringe/solenoid_potential.hpp"

#include "abfringe/specfun.hpp"

#include <cmath>
#include <numbers>

namespace abfringe::potential {

namespace {

void require_outside_axis(double r) {
    if (!(r > 0.0))
        throw InvalidInput("field point radius must be positive");
}

} // namespace

double vector_potential_exact(const FieldPoint& p, const SolenoidDrive& drive,
                              const PhysicalConstants& k) {
    require_outside_axis(p.r);
    const double omega = drive.omega();
    if (omega == 0.0)
        return vector_potential_near(p, drive);

    const double x_in = omega * drive.radius() / k.c;
    const double x_out = omega * p.r / k.c;
    const double phase = omega * p.t + std::numbers::pi / 2.0;
    const double amplitude = -drive.lambda_flux() / (2.0 * drive.radius()) * specfun::bessel_j1(x_in);
    return amplitude * (std::sin(phase) * specfun::bessel_y1(x_out) +
                        std::cos(phase) * specfun::bessel_j1(x_out));
}

double vector_potential_near(double r, double t, double lambda_flux, double omega) {
    require_outside_axis(r);
    return lambda_flux / (2.0 * std::numbers::pi) * std::cos(omega * t) / r;
}

double vector_potential_near(const FieldPoint& p, const SolenoidDrive& drive) {
    return vector_potential_near(p.r, p.t, drive.lambda_flux(), drive.omega());
}

double electric_field_near(const FieldPoint& p, const SolenoidDrive& drive) {
    require_outside_axis(p.r);
    const double omega = drive.omega();
    return drive.lambda_flux() * omega / (2.0 * std::numbers::pi) * std::sin(omega * p.t) / p.r;
}

} // namespace abfringe::potential
