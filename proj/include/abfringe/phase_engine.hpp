#pragma once

#include "abfringe/core_model.hpp"
#include "abfringe/quadrature.hpp"

#include <complex>
#include <optional>

namespace abfringe::phase {

/// Everything one phase computation needs. Construction checks that no classical
/// path touches the solenoid.
class PhaseRequest {
public:
    /// Throws InvalidInput if the geometry clearance check fails for drive.radius().
    static PhaseRequest create(const InterferometerGeometry& geom, const SolenoidDrive& drive,
                               std::optional<ParticleParams> particle = std::nullopt,
                               const quad::QuadratureSpec& quad = {},
                               const PhysicalConstants& constants = PhysicalConstants::codata2018());

    const InterferometerGeometry& geometry() const noexcept { return geom_; }
    const SolenoidDrive& drive() const noexcept { return drive_; }
    const std::optional<ParticleParams>& particle() const noexcept { return particle_; }
    const quad::QuadratureSpec& quadrature() const noexcept { return quad_; }
    const PhysicalConstants& constants() const noexcept { return constants_; }

    /// Particle charge if a particle is attached, otherwise +e.
    double charge() const noexcept;

    PhaseRequest with_omega(double omega) const;

private:
    PhaseRequest(const InterferometerGeometry& g, const SolenoidDrive& d,
                 std::optional<ParticleParams> p, const quad::QuadratureSpec& q,
                 const PhysicalConstants& k)
        : geom_(g), drive_(d), particle_(std::move(p)), quad_(q), constants_(k) {}

    InterferometerGeometry geom_;
    SolenoidDrive drive_;
    std::optional<ParticleParams> particle_;
    quad::QuadratureSpec quad_;
    PhysicalConstants constants_;
};

/// A real phase phi with I = i phi, plus its absolute quadrature error bound.
struct PhaseValue {
    double phi = 0.0;
    double quad_error = 0.0;
    bool converged = true;
};

struct PhaseResult {
    double phi_u = 0.0;
    double phi_l = 0.0;
    double dn_omega = 0.0;
    double dn_static = 0.0;
    double f_ratio = 1.0;
    double quad_error = 0.0;
    bool converged = true;
};

/// phi_U along S0 -> S1 -> D from the completed-square (y-substituted) integrals.
PhaseValue phase_upper(const PhaseRequest& req);

/// phi_L = -phi_U.
PhaseValue phase_lower(const PhaseRequest& req);

/// phi_L by re-integrating the lower branch with b -> -b. Verification path.
PhaseValue phase_lower_direct(const PhaseRequest& req);

/// Delta n_S = q lambda Phi_s / (2 pi hbar). Geometry independent.
double static_fringe_shift(const SolenoidDrive& drive, const PhysicalConstants& k,
                           double charge);
double static_fringe_shift(const SolenoidDrive& drive,
                           const PhysicalConstants& k = PhysicalConstants::codata2018());

/// Full result at the drive's omega. dn_omega = (phi_L - phi_U) / 2pi, which
/// is +dn_static at omega = 0 for q lambda Phi_s > 0.
PhaseResult fringe_shift(const PhaseRequest& req);

/// Symmetric-geometry ratio
///   f(wT) = (4/pi) cos(wT/2) int_0^1 cos(wT y / 2) / (1 + y^2) dy.
/// Throws InvalidInput for omega_t < 0.
double f_ratio(double omega_t, const quad::QuadratureSpec& quad = {});

struct FRatioValue {
    double f = 0.0;
    double error = 0.0; // absolute bound on f from the quadrature
    bool converged = true;
};

FRatioValue f_ratio_detailed(double omega_t, const quad::QuadratureSpec& quad = {});

/// Free-particle kernel prefactor of one branch,
///   (m / 2 pi i hbar T_S)^1/2 exp[i m (l1^2+b^2) / 2 hbar T_S]
///   (m / 2 pi i hbar T_D)^1/2 exp[i m (l2^2+b^2) / 2 hbar T_D].
/// Both branches share it.
struct KernelPrefactor {
    double modulus; // 1/m^2 in two dimensions
    double phase;   // rad, not reduced mod 2 pi

    std::complex<double> value() const { return std::polar(modulus, phase); }
};

KernelPrefactor kernel_prefactor(const InterferometerGeometry& geom, const ParticleParams& particle,
                                 const PhysicalConstants& k = PhysicalConstants::codata2018());

struct Interference {
    double intensity;     // |1 + exp(i (phi_u - phi_l))|^2 / 4
    double fringe_number; // (phi_u - phi_l) / 2 pi
};

// Note the sign: fringe_number is (phi_u - phi_l) / 2 pi, the opposite of PhaseResult::dn_omega.
Interference interference_factor(double phi_u, double phi_l);

/// Brute-force phi_U: (q / hbar) int A(r_cl(t), t) theta_hat . r_dot_cl dt over
/// [-T_S, T_D] with the composite trapezoid rule, directly in the time domain.
/// Steps are split between the legs in proportion to their durations so that the
/// velocity kink at t = 0 is a node. Throws InvalidInput for n_steps < 1000.
double phase_oracle_time_domain(const PhaseRequest& req, long n_steps);

} // namespace abfringe::phase
