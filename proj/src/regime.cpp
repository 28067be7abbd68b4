#include "abfringe/regime.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace abfringe::regime {

bool RegimeReport::all_pass() const {
    return geometry_clear &&
           std::all_of(flags.begin(), flags.end(), [](const CheckFlag& f) { return f.pass; });
}

double fluctuation_scale(const ParticleParams& particle, double transit,
                         const PhysicalConstants& k) {
    if (!(transit > 0.0))
        throw InvalidInput("transit time must be positive");
    return std::sqrt(2.0 * k.hbar * transit / particle.mass);
}

double fluctuation_velocity_scale(const ParticleParams& particle, double transit,
                                  const PhysicalConstants& k) {
    if (!(transit > 0.0))
        throw InvalidInput("transit time must be positive");
    return std::sqrt(2.0 * k.hbar / (particle.mass * transit));
}

double fluctuation_dominance_ratio(double dn_static, const ParticleParams& particle,
                                   double length_scale_r) {
    if (!(length_scale_r > 0.0))
        throw InvalidInput("length scale must be positive");
    return std::abs(dn_static) * particle.de_broglie / length_scale_r;
}

double near_field_ratio(const InterferometerGeometry& geom, const SolenoidDrive& drive,
                        const PhysicalConstants& k) {
    return drive.omega() * geom.max_radius() / k.c;
}

RegimeReport build_report(const phase::PhaseRequest& req, const Thresholds& th) {
    const auto& g = req.geometry();
    const auto& k = req.constants();
    RegimeReport rep;
    rep.dn_static = phase::static_fringe_shift(req.drive(), k, req.charge());
    rep.r_max = g.max_radius();
    rep.length_scale = std::min({g.l1, g.l2, g.b});
    rep.near_field_ratio = near_field_ratio(g, req.drive(), k);
    rep.geometry_clear = validate_geometry(g, req.drive().radius()).ok;

    if (const auto& p = req.particle()) {
        const double transit = g.max_transit();
        rep.fluct_y_scale = fluctuation_scale(*p, transit, k);
        rep.fluct_velocity_scale = fluctuation_velocity_scale(*p, transit, k);
        rep.de_broglie = p->de_broglie;
        rep.momentum = p->momentum();
        rep.fluct_ratio = fluctuation_dominance_ratio(rep.dn_static, *p, rep.length_scale);
        rep.flags.push_back({"fluctuation_dominance", *rep.fluct_ratio, th.fluctuation,
                             *rep.fluct_ratio < th.fluctuation});
    } else {
        rep.absent = {"fluct_y_scale", "fluct_velocity_scale", "fluct_ratio", "de_broglie",
                      "momentum"};
    }
    rep.flags.push_back(
        {"near_field", rep.near_field_ratio, th.near_field, rep.near_field_ratio < th.near_field});
    return rep;
}

namespace {

void line(std::ostream& os, const char* name, double si, const char* si_unit, double cgs,
          const char* cgs_unit) {
    os << std::left << std::setw(22) << name << std::setprecision(6) << std::scientific << si
       << ' ' << std::setw(8) << si_unit << " = " << cgs << ' ' << cgs_unit << '\n';
}

void optional_line(std::ostream& os, const char* name, const std::optional<double>& v,
                   const char* si_unit, double factor, const char* cgs_unit) {
    if (v)
        line(os, name, *v, si_unit, *v * factor, cgs_unit);
    else
        os << std::left << std::setw(22) << name << "absent (no particle)\n";
}

} // namespace

std::string render_text(const RegimeReport& rep) {
    std::ostringstream os;
    os << std::left << std::setw(22) << "dn_static" << std::setprecision(10) << rep.dn_static
       << '\n';
    line(os, "r_max", rep.r_max, "m", rep.r_max * kCmPerMetre, "cm");
    line(os, "length_scale", rep.length_scale, "m", rep.length_scale * kCmPerMetre, "cm");
    optional_line(os, "momentum", rep.momentum, "kg m/s", kGramCmPerKgMetre, "g cm/s");
    optional_line(os, "de_broglie", rep.de_broglie, "m", kCmPerMetre, "cm");
    optional_line(os, "fluct_y_scale", rep.fluct_y_scale, "m", kCmPerMetre, "cm");
    optional_line(os, "fluct_velocity_scale", rep.fluct_velocity_scale, "m/s", kCmPerMetre,
                  "cm/s");
    os << std::left << std::setw(22) << "geometry_clear" << (rep.geometry_clear ? "yes" : "no")
       << '\n';
    for (const auto& f : rep.flags) {
        os << std::left << std::setw(22) << f.name << std::setprecision(6) << std::scientific
           << f.value << "  (threshold " << f.threshold << ")  " << (f.pass ? "PASS" : "WARN")
           << '\n';
    }
    return os.str();
}

} // namespace abfringe::regime
