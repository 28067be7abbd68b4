#pragma once

#include "abfringe/core_model.hpp"

namespace abfringe::potential {

/// A point outside the solenoid at radial distance r (m) and time t (s).
struct FieldPoint {
    double r;
    double t;
};

/// Azimuthal A (T m) of the infinite AC solenoid in the Lorentz gauge with zero
/// scalar potential:
///
///   A = -(lambda Phi_s / 2R) J1(wR/c) [sin(wt + pi/2) Y1(wr/c) + cos(wt + pi/2) J1(wr/c)]
///
/// At omega == 0 the Bessel form is 0 * infinity; the static 1/r potential
/// (vector_potential_near) is returned instead.
double vector_potential_exact(const FieldPoint& p, const SolenoidDrive& drive,
                              const PhysicalConstants& k = PhysicalConstants::codata2018());

/// Near-field form, A = (lambda Phi_s / 2 pi) cos(wt) / r. Exact at omega == 0.
double vector_potential_near(const FieldPoint& p, const SolenoidDrive& drive);

/// Same, parameterised directly by lambda Phi_s (Wb) and omega.
double vector_potential_near(double r, double t, double lambda_flux, double omega);

/// Induced azimuthal field E = -dA/dt of the near-field form, V/m.
double electric_field_near(const FieldPoint& p, const SolenoidDrive& drive);

} // namespace abfringe::potential
