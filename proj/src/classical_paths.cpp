#include "abfringe/classical_paths.hpp"

#include <cmath>
#include <sstream>

namespace abfringe::paths {

namespace {

double mirror(Branch br) { return br == Branch::upper ? 1.0 : -1.0; }

void require_in_window(SegmentId seg, double t, const InterferometerGeometry& geom) {
    const TimeWindow w = leg_window(seg.leg, geom);
    if (!(t >= w.begin && t <= w.end)) {
        std::ostringstream os;
        os << "time " << t << " s outside leg window [" << w.begin << ", " << w.end << "]";
        throw InvalidInput(os.str());
    }
}

} // namespace

TimeWindow leg_window(Leg leg, const InterferometerGeometry& geom) {
    return leg == Leg::source_to_slit ? TimeWindow{-geom.t_s, 0.0} : TimeWindow{0.0, geom.t_d};
}

Vec2 classical_position(SegmentId seg, double t, const InterferometerGeometry& geom) {
    require_in_window(seg, t, geom);
    const double s = mirror(seg.branch);
    if (seg.leg == Leg::source_to_slit)
        return {geom.l1 * t / geom.t_s, s * geom.b * (1.0 + t / geom.t_s)};
    return {geom.l2 * t / geom.t_d, s * geom.b * (1.0 - t / geom.t_d)};
}

Vec2 classical_velocity(SegmentId seg, const InterferometerGeometry& geom) {
    const double s = mirror(seg.branch);
    if (seg.leg == Leg::source_to_slit)
        return {geom.l1 / geom.t_s, s * geom.b / geom.t_s};
    return {geom.l2 / geom.t_d, -s * geom.b / geom.t_d};
}

double azimuthal_projection(SegmentId seg, double t, const InterferometerGeometry& geom) {
    const Vec2 pos = classical_position(seg, t, geom);
    const Vec2 vel = classical_velocity(seg, geom);
    const double r = std::hypot(pos.x, pos.y);
    if (!(r > 0.0))
        throw InvalidInput("classical path passes through the solenoid axis");
    return (-pos.y * vel.x + pos.x * vel.y) / r;
}

} // namespace abfringe::paths
