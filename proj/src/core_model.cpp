#include "abfringe/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace abfringe {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << "non-positive " << name << ": " << v;
        throw InvalidInput(os.str());
    }
}

double segment_clearance(double l, double b) { return l * b / std::hypot(l, b); }

} // namespace

PhysicalConstants PhysicalConstants::codata2018() noexcept {
    return {1.054571817e-34, 1.25663706212e-6, 299792458.0, 1.602176634e-19, 9.1093837015e-31};
}

PhysicalConstants PhysicalConstants::custom(double hbar, double mu0, double c, double e_charge,
                                            double m_electron) {
    require_positive(hbar, "hbar");
    require_positive(mu0, "mu0");
    require_positive(c, "c");
    require_positive(e_charge, "e_charge");
    require_positive(m_electron, "m_electron");
    return {hbar, mu0, c, e_charge, m_electron};
}

double PhysicalConstants::planck() const noexcept { return 2.0 * std::numbers::pi * hbar; }

double PhysicalConstants::flux_quantum() const noexcept { return planck() / e_charge; }

double SolenoidDrive::phi_s() const noexcept {
    return mu0_ * i0_ * std::numbers::pi * radius_ * radius_;
}

SolenoidDrive SolenoidDrive::with_omega(double omega) const {
    if (!(omega >= 0.0) || !std::isfinite(omega))
        throw InvalidInput("negative or non-finite omega");
    SolenoidDrive d = *this;
    d.omega_ = omega;
    return d;
}

SolenoidDrive make_drive(double i0, double radius, double omega, double lambda_order,
                         const PhysicalConstants& k) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw InvalidInput("non-positive radius: " + std::to_string(radius));
    if (!(i0 >= 0.0) || !std::isfinite(i0))
        throw InvalidInput("negative current amplitude i0: " + std::to_string(i0));
    if (!(omega >= 0.0) || !std::isfinite(omega))
        throw InvalidInput("negative angular frequency omega: " + std::to_string(omega));
    if (!(lambda_order > 0.0 && lambda_order <= 1.0))
        throw InvalidInput("order parameter lambda outside (0, 1]: " +
                           std::to_string(lambda_order));
    return SolenoidDrive(i0, radius, omega, lambda_order, k.mu0);
}

SolenoidDrive drive_from_flux(double lambda_flux, double radius, double omega,
                              double lambda_order, const PhysicalConstants& k) {
    if (!(lambda_flux >= 0.0) || !std::isfinite(lambda_flux))
        throw InvalidInput("negative flux: " + std::to_string(lambda_flux));
    require_positive(radius, "radius");
    if (!(lambda_order > 0.0 && lambda_order <= 1.0))
        throw InvalidInput("order parameter lambda outside (0, 1]");
    const double i0 = lambda_flux / (lambda_order * k.mu0 * std::numbers::pi * radius * radius);
    return make_drive(i0, radius, omega, lambda_order, k);
}

double InterferometerGeometry::max_radius() const noexcept {
    return std::max(std::hypot(l1, b), std::hypot(l2, b));
}

InterferometerGeometry make_geometry(double l1, double l2, double b, double t_s, double t_d) {
    require_positive(l1, "l1");
    require_positive(l2, "l2");
    require_positive(b, "b");
    require_positive(t_s, "t_s");
    require_positive(t_d, "t_d");
    return {l1, l2, b, t_s, t_d};
}

InterferometerGeometry symmetric_geometry(double length, double transit) {
    return make_geometry(length, length, length, transit, transit);
}

GeometryReport validate_geometry(const InterferometerGeometry& geom, double radius) {
    GeometryReport rep{true, segment_clearance(geom.l1, geom.b),
                       segment_clearance(geom.l2, geom.b), {}};
    std::ostringstream os;
    if (!(radius < rep.clearance_source)) {
        rep.ok = false;
        os << "source leg passes within " << rep.clearance_source << " m of the axis (R = "
           << radius << " m); ";
    }
    if (!(radius < rep.clearance_screen)) {
        rep.ok = false;
        os << "screen leg passes within " << rep.clearance_screen << " m of the axis (R = "
           << radius << " m); ";
    }
    rep.message = rep.ok ? "ok" : os.str();
    return rep;
}

ParticleParams make_particle(double mass, double charge, double kinetic_energy,
                             const PhysicalConstants& k) {
    require_positive(mass, "mass");
    require_positive(kinetic_energy, "kinetic_energy");
    if (!std::isfinite(charge))
        throw InvalidInput("non-finite charge");
    const double speed = std::sqrt(2.0 * kinetic_energy / mass);
    if (speed > 0.1 * k.c) {
        std::ostringstream os;
        os << "speed " << speed << " m/s exceeds 0.1 c; nonrelativistic model does not apply";
        throw InvalidInput(os.str());
    }
    return {mass, charge, kinetic_energy, speed, k.hbar / (mass * speed)};
}

ParticleParams electron_ev(double energy_ev, const PhysicalConstants& k) {
    return make_particle(k.m_electron, k.e_charge, energy_ev * k.e_charge, k);
}

} // namespace abfringe
