#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace abfringe {

/// Raised for any argument that violates a documented domain bound.
/// The message names the offending quantity.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// SI constants. Defaults are CODATA-2018.
struct PhysicalConstants {
    double hbar;       // J s
    double mu0;        // T m / A
    double c;          // m / s
    double e_charge;   // C
    double m_electron; // kg

    static PhysicalConstants codata2018() noexcept;

    /// Arbitrary positive values, e.g. natural units (hbar = c = 1) for tests.
    static PhysicalConstants custom(double hbar, double mu0, double c, double e_charge,
                                    double m_electron);

    double planck() const noexcept;
    /// h/e, the flux producing one full fringe for unit charge e.
    double flux_quantum() const noexcept;
};

/// AC solenoid drive, I_S(t) = lambda * i0 * sin(omega t + pi/2).
///
/// i0 is current per unit solenoid length (A/m), so B inside is mu0 * i0 and the
/// steady flux is phi_s = mu0 * i0 * pi * R^2. phi_s is never stored; it is always
/// derived from (i0, R).
class SolenoidDrive {
public:
    double i0() const noexcept { return i0_; }
    double radius() const noexcept { return radius_; }
    double omega() const noexcept { return omega_; }
    double lambda_order() const noexcept { return lambda_; }
    double mu0() const noexcept { return mu0_; }

    /// Steady flux, Wb.
    double phi_s() const noexcept;
    /// lambda * phi_s, the single magnetic strength entering every phase integral.
    double lambda_flux() const noexcept { return lambda_ * phi_s(); }

    SolenoidDrive with_omega(double omega) const;

    friend SolenoidDrive make_drive(double, double, double, double, const PhysicalConstants&);

private:
    SolenoidDrive(double i0, double radius, double omega, double lambda, double mu0)
        : i0_(i0), radius_(radius), omega_(omega), lambda_(lambda), mu0_(mu0) {}

    double i0_;
    double radius_;
    double omega_;
    double lambda_;
    double mu0_;
};

/// Throws InvalidInput on radius <= 0, i0 < 0, omega < 0 or lambda outside (0, 1].
SolenoidDrive make_drive(double i0, double radius, double omega, double lambda_order,
                         const PhysicalConstants& k = PhysicalConstants::codata2018());

/// Back-computes i0 so that lambda * phi_s equals `lambda_flux` (>= 0).
SolenoidDrive drive_from_flux(double lambda_flux, double radius, double omega,
                              double lambda_order = 1.0,
                              const PhysicalConstants& k = PhysicalConstants::codata2018());

/// Two-slit layout. Source S0 at (-l1, 0), slits at (0, +-b), screen point D at (l2, 0).
/// The packet leaves S0 at t = -t_s, reaches both slits at t = 0 and D at t = t_d.
struct InterferometerGeometry {
    double l1;
    double l2;
    double b;
    double t_s;
    double t_d;

    bool is_symmetric() const noexcept { return l1 == l2 && l1 == b && t_s == t_d; }
    double max_transit() const noexcept { return t_s > t_d ? t_s : t_d; }
    /// Farthest classical-path point from the solenoid axis.
    double max_radius() const noexcept;
};

/// Throws InvalidInput unless all five fields are strictly positive and finite.
InterferometerGeometry make_geometry(double l1, double l2, double b, double t_s, double t_d);

/// Symmetric layout l1 = l2 = b = length, t_s = t_d = transit.
InterferometerGeometry symmetric_geometry(double length, double transit);

struct GeometryReport {
    bool ok;
    double clearance_source; // distance from axis to segment S0-S1
    double clearance_screen; // distance from axis to segment S1-D
    std::string message;
};

/// Checks that neither straight leg touches a solenoid of the given radius.
GeometryReport validate_geometry(const InterferometerGeometry& geom, double radius);

/// Nonrelativistic particle. de_broglie follows the hbar/(m v) convention.
struct ParticleParams {
    double mass;
    double charge;
    double kinetic_energy;
    double speed;
    double de_broglie;

    double momentum() const noexcept { return mass * speed; }
};

/// Throws InvalidInput for mass <= 0, kinetic_energy <= 0 or speed above 0.1 c.
ParticleParams make_particle(double mass, double charge, double kinetic_energy,
                             const PhysicalConstants& k = PhysicalConstants::codata2018());

/// Electron-mass particle carrying charge +e, kinetic energy given in eV.
ParticleParams electron_ev(double energy_ev,
                           const PhysicalConstants& k = PhysicalConstants::codata2018());

} // namespace abfringe
