#pragma once

#include "abfringe/core_model.hpp"
#include "abfringe/phase_engine.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abfringe::regime {

// Exact SI -> g cm s factors.
inline constexpr double kCmPerMetre = 100.0;
inline constexpr double kGramCmPerKgMetre = 1.0e5; // momentum, g cm/s per kg m/s

/// A ratio that must stay "much less than one"; warns at or above the threshold.
struct Thresholds {
    double fluctuation = 1e-2;
    double near_field = 1e-2;
};

struct CheckFlag {
    std::string name;
    double value;
    double threshold;
    bool pass;
};

struct RegimeReport {
    double dn_static = 0.0;
    double near_field_ratio = 0.0;
    double r_max = 0.0;        // m, farthest classical-path point from the axis
    double length_scale = 0.0; // m, the R in the dominance ratio
    bool geometry_clear = true;

    // Absent when no particle is attached to the request.
    std::optional<double> fluct_y_scale;        // m
    std::optional<double> fluct_velocity_scale; // m/s, sqrt(2 hbar / m T)
    std::optional<double> fluct_ratio;
    std::optional<double> de_broglie; // m
    std::optional<double> momentum;   // kg m/s

    std::vector<CheckFlag> flags;
    std::vector<std::string> absent; // names of fields that could not be computed

    bool all_pass() const;
};

/// sqrt(2 hbar T / m), the transverse extent of the free quantum fluctuations over
/// a transit time T. Throws InvalidInput for transit <= 0.
double fluctuation_scale(const ParticleParams& particle, double transit,
                         const PhysicalConstants& k = PhysicalConstants::codata2018());

/// sqrt(2 hbar / (m T)), the matching velocity scale.
double fluctuation_velocity_scale(const ParticleParams& particle, double transit,
                                  const PhysicalConstants& k = PhysicalConstants::codata2018());

/// dn_static * lambda_dB / R: size of the A-dependent fluctuation coupling relative
/// to the kinetic term. Throws InvalidInput for length_scale_r <= 0.
double fluctuation_dominance_ratio(double dn_static, const ParticleParams& particle,
                                   double length_scale_r);

/// omega * r_max / c with r_max = max(sqrt(l1^2+b^2), sqrt(l2^2+b^2)).
double near_field_ratio(const InterferometerGeometry& geom, const SolenoidDrive& drive,
                        const PhysicalConstants& k = PhysicalConstants::codata2018());

/// Aggregates all checks. The fluctuation scale is evaluated at the longer of the
/// two transit times, and the dominance ratio uses the shortest of l1, l2, b as R.
RegimeReport build_report(const phase::PhaseRequest& req, const Thresholds& th = {});

/// Human-readable report, every scale in SI and in g cm s.
std::string render_text(const RegimeReport& rep);

} // namespace abfringe::regime
