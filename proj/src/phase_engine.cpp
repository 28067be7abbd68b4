#include "abfringe/phase_engine.hpp"

#include "abfringe/classical_paths.hpp"
#include "abfringe/solenoid_potential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace abfringe::phase {

namespace {

constexpr double kPi = std::numbers::pi;

struct Bracket {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;

    void add(double coef, const quad::QuadratureOutcome& q) {
        value += coef * q.value;
        error += std::abs(coef) * q.error_estimate;
        converged = converged && q.converged;
    }
};

// One straight leg in dimensionless time u = t / T_leg after completing the square
// in the denominator l^2 t^2 + b^2 (T -+ t)^2:
//
//   -(b l / (b^2 + l^2)) int du cos(wT (u -+ c)) / (u^2 + rho^2),
//   c = b^2 / (b^2 + l^2),  rho = b l / (b^2 + l^2).
//
// Source leg: u in [c - 1, c], argument u - c. Screen leg: u in [-c, 1 - c],
// argument u + c. The Lorentzian peak sits at u = 0, so it is made a breakpoint.
// `b` is signed; the lower branch is b -> -b.
void add_leg(Bracket& acc, paths::Leg leg, double l, double b, double omega_t,
             const quad::QuadratureSpec& spec) {
    const double norm = b * b + l * l;
    const double shift = b * b / norm;
    const double rho = b * l / norm;
    const double rho2 = rho * rho;
    const double coef = -rho;

    const bool source = leg == paths::Leg::source_to_slit;
    const double lo = source ? shift - 1.0 : -shift;
    const double hi = source ? shift : 1.0 - shift;
    const double sign = source ? -1.0 : 1.0;

    const quad::Integrand g = [=](double u) {
        return std::cos(omega_t * (u + sign * shift)) / (u * u + rho2);
    };
    acc.add(coef, quad::integrate_adaptive(g, lo, 0.0, spec));
    acc.add(coef, quad::integrate_adaptive(g, 0.0, hi, spec));
}

// Sum of both legs for a branch with signed slit offset b. phi = (q lambda Phi_s / 2 pi hbar) * bracket.
Bracket branch_bracket(const InterferometerGeometry& g, double b_signed, double omega,
                       const quad::QuadratureSpec& spec) {
    Bracket acc;
    add_leg(acc, paths::Leg::source_to_slit, g.l1, b_signed, omega * g.t_s, spec);
    add_leg(acc, paths::Leg::slit_to_screen, g.l2, b_signed, omega * g.t_d, spec);
    return acc;
}

double phase_scale(const PhaseRequest& req) {
    return req.charge() * req.drive().lambda_flux() / (2.0 * kPi * req.constants().hbar);
}

PhaseValue to_phase(const Bracket& br, double scale) {
    return {scale * br.value, std::abs(scale) * br.error, br.converged};
}

} // namespace

PhaseRequest PhaseRequest::create(const InterferometerGeometry& geom, const SolenoidDrive& drive,
                                  std::optional<ParticleParams> particle,
                                  const quad::QuadratureSpec& quad,
                                  const PhysicalConstants& constants) {
    make_geometry(geom.l1, geom.l2, geom.b, geom.t_s, geom.t_d);
    quad.validate();
    const GeometryReport rep = validate_geometry(geom, drive.radius());
    if (!rep.ok)
        throw InvalidInput("classical path intersects the solenoid: " + rep.message);
    return PhaseRequest(geom, drive, std::move(particle), quad, constants);
}

double PhaseRequest::charge() const noexcept {
    return particle_ ? particle_->charge : constants_.e_charge;
}

PhaseRequest PhaseRequest::with_omega(double omega) const {
    PhaseRequest r = *this;
    r.drive_ = drive_.with_omega(omega);
    return r;
}

PhaseValue phase_upper(const PhaseRequest& req) {
    const auto& g = req.geometry();
    return to_phase(branch_bracket(g, g.b, req.drive().omega(), req.quadrature()), phase_scale(req));
}

PhaseValue phase_lower(const PhaseRequest& req) {
    PhaseValue v = phase_upper(req);
    v.phi = -v.phi;
    return v;
}

PhaseValue phase_lower_direct(const PhaseRequest& req) {
    const auto& g = req.geometry();
    return to_phase(branch_bracket(g, -g.b, req.drive().omega(), req.quadrature()),
                    phase_scale(req));
}

double static_fringe_shift(const SolenoidDrive& drive, const PhysicalConstants& k, double charge) {
    return charge * drive.lambda_flux() / (2.0 * kPi * k.hbar);
}

double static_fringe_shift(const SolenoidDrive& drive, const PhysicalConstants& k) {
    return static_fringe_shift(drive, k, k.e_charge);
}

PhaseResult fringe_shift(const PhaseRequest& req) {
    const auto& g = req.geometry();
    const Bracket br = branch_bracket(g, g.b, req.drive().omega(), req.quadrature());
    const double scale = phase_scale(req);

    PhaseResult res;
    res.phi_u = scale * br.value;
    res.phi_l = -res.phi_u;
    res.quad_error = std::abs(scale) * br.error;
    res.converged = br.converged;
    res.dn_static = static_fringe_shift(req.drive(), req.constants(), req.charge());
    // dn_omega / dn_static = -bracket / pi, independent of the flux; storing
    // dn_omega as f * dn_static keeps the pair exactly consistent.
    res.f_ratio = -br.value / kPi;
    res.dn_omega = res.f_ratio * res.dn_static;
    return res;
}

FRatioValue f_ratio_detailed(double omega_t, const quad::QuadratureSpec& quad) {
    if (!(omega_t >= 0.0) || !std::isfinite(omega_t))
        throw InvalidInput("omega_t must be a finite non-negative number");
    if (omega_t == 0.0)
        return {1.0, 0.0, true};
    const double half = 0.5 * omega_t;
    const auto q = quad::integrate_adaptive(
        [half](double y) { return std::cos(half * y) / (1.0 + y * y); }, 0.0, 1.0, quad);
    const double c = std::cos(half);
    return {c * q.value / (kPi / 4.0), std::abs(c) * q.error_estimate / (kPi / 4.0), q.converged};
}

double f_ratio(double omega_t, const quad::QuadratureSpec& quad) {
    return f_ratio_detailed(omega_t, quad).f;
}

KernelPrefactor kernel_prefactor(const InterferometerGeometry& geom, const ParticleParams& particle,
                                 const PhysicalConstants& k) {
    const double m = particle.mass;
    const double modulus = m / (2.0 * kPi * k.hbar * std::sqrt(geom.t_s * geom.t_d));
    const double dyn = m * (geom.l1 * geom.l1 + geom.b * geom.b) / (2.0 * k.hbar * geom.t_s) +
                       m * (geom.l2 * geom.l2 + geom.b * geom.b) / (2.0 * k.hbar * geom.t_d);
    // Each (1/i)^(1/2) contributes exp(-i pi/4).
    return {modulus, dyn - kPi / 2.0};
}

Interference interference_factor(double phi_u, double phi_l) {
    const double d = phi_u - phi_l;
    const std::complex<double> amp = 1.0 + std::polar(1.0, d);
    return {std::norm(amp) / 4.0, d / (2.0 * kPi)};
}

double phase_oracle_time_domain(const PhaseRequest& req, long n_steps) {
    if (n_steps < 1000)
        throw InvalidInput("time-domain oracle needs n_steps >= 1000");
    const auto& g = req.geometry();
    const double flux = req.drive().lambda_flux();
    const double omega = req.drive().omega();
    const double q_over_hbar = req.charge() / req.constants().hbar;

    const auto n_source = std::max<long>(
        1, std::lround(static_cast<double>(n_steps) * g.t_s / (g.t_s + g.t_d)));
    const long n_screen = std::max<long>(1, n_steps - n_source);

    double total = 0.0;
    for (const paths::Leg leg : {paths::Leg::source_to_slit, paths::Leg::slit_to_screen}) {
        const paths::SegmentId seg{paths::Branch::upper, leg};
        const auto w = paths::leg_window(leg, g);
        const quad::Integrand integrand = [&, seg](double t) {
            const auto pos = paths::classical_position(seg, t, g);
            const double r = std::hypot(pos.x, pos.y);
            return potential::vector_potential_near(r, t, flux, omega) *
                   paths::azimuthal_projection(seg, t, g);
        };
        total += quad::integrate_fixed_trapezoid(
            integrand, w.begin, w.end, leg == paths::Leg::source_to_slit ? n_source : n_screen);
    }
    return q_over_hbar * total;
}

} // namespace abfringe::phase
