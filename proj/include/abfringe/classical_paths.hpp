#pragma once

#include "abfringe/core_model.hpp"

#include <array>

namespace abfringe::paths {

enum class Branch { upper, lower };
enum class Leg { source_to_slit, slit_to_screen };

struct SegmentId {
    Branch branch;
    Leg leg;
};

inline constexpr std::array<SegmentId, 4> kAllSegments = {{
    {Branch::upper, Leg::source_to_slit},
    {Branch::upper, Leg::slit_to_screen},
    {Branch::lower, Leg::source_to_slit},
    {Branch::lower, Leg::slit_to_screen},
}};

struct Vec2 {
    double x;
    double y;
};

/// Time window of a leg: [-t_s, 0] for source_to_slit, [0, t_d] for slit_to_screen.
struct TimeWindow {
    double begin;
    double end;
};

TimeWindow leg_window(Leg leg, const InterferometerGeometry& geom);

/// Straight-line (zero-field) position. Both branches reach their slit at t = 0;
/// the lower branch is the y -> -y mirror of the upper one.
/// Throws InvalidInput if t lies outside the leg's window.
Vec2 classical_position(SegmentId seg, double t, const InterferometerGeometry& geom);

/// Constant velocity on each leg.
Vec2 classical_velocity(SegmentId seg, const InterferometerGeometry& geom);

/// theta_hat . r_dot = (-y vx + x vy) / r, in m/s. On the upper source leg this is
/// -b l1 / (t_s r(t)).
double azimuthal_projection(SegmentId seg, double t, const InterferometerGeometry& geom);

} // namespace abfringe::paths
