#include "abfringe/solenoid_potential.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace abfringe;
using namespace abfringe::potential;

namespace {

constexpr double kPi = std::numbers::pi;
const PhysicalConstants kK = PhysicalConstants::codata2018();

} // namespace

TEST_CASE("near-field potential") {
    const auto d = drive_from_flux(2.0 * kPi * 1e-6, 1e-3, 0.0);
    CHECK(vector_potential_near({1.0, 0.0}, d) == doctest::Approx(1e-6).epsilon(1e-12));
    CHECK(vector_potential_near({2.0, 0.0}, d) == doctest::Approx(0.5e-6).epsilon(1e-12));

    const auto ac = d.with_omega(3.0);
    CHECK(std::abs(vector_potential_near({1.0, kPi / 6.0}, ac)) < 1e-20);
    CHECK_THROWS_AS(vector_potential_near({0.0, 0.0}, d), InvalidInput);
}

TEST_CASE("induced electric field") {
    const auto d = drive_from_flux(2.0 * kPi, 1e-3, 1.0);
    CHECK(electric_field_near({1.0, kPi / 2.0}, d) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(electric_field_near({1.0, 0.0}, d) == 0.0);
    CHECK(electric_field_near({0.3, 1.7}, d.with_omega(0.0)) == 0.0);
    CHECK_THROWS_AS(electric_field_near({-1.0, 0.0}, d), InvalidInput);
}

TEST_CASE("E = -dA/dt for the near field") {
    const auto d = drive_from_flux(1e-14, 1e-3, 2.0 * kPi * 50.0);
    const double w = d.omega();
    const double h = 1e-6 / w;
    for (double t : {0.0013, 0.0041, 0.0072, 0.0155}) {
        const FieldPoint p{0.02, t};
        const double dadt = (vector_potential_near({p.r, t + h}, d) - vector_potential_near({p.r, t - h}, d)) / (2 * h);
        const double e = electric_field_near(p, d);
        CHECK(std::abs(-dadt - e) <= 1e-6 * std::abs(e));
    }
}

TEST_CASE("exact potential selects terms by phase") {
    const double w = 1e6;
    const auto d = drive_from_flux(1e-12, 0.01, w);
    const double r = 50.0;
    const double t = kPi / (2.0 * w); // sin(wt + pi/2) = 0
    const double expected = d.lambda_flux() / (2.0 * d.radius()) * std::cyl_bessel_j(1.0, w * d.radius() / kK.c) *
                            std::cyl_bessel_j(1.0, w * r / kK.c);
    // sin(pi) is ~1e-16 in floating point, leaving a tiny Y1 contribution.
    const double y_leak = d.lambda_flux() / (2.0 * d.radius()) * std::cyl_bessel_j(1.0, w * d.radius() / kK.c) *
                          std::abs(std::cyl_neumann(1.0, w * r / kK.c)) * 1e-15;
    CHECK(std::abs(vector_potential_exact({r, t}, d) - expected) <= 1e-10 * std::abs(expected) + y_leak);
}

TEST_CASE("exact potential matches the near field at small wr/c") {
    const double r = 0.03;
    const double w = 1e-4 * kK.c / r; // wr/c = 1e-4
    const auto d = drive_from_flux(3e-15, r / 10.0, w); // wR/c = 1e-5
    const double amplitude = d.lambda_flux() / (2.0 * kPi * r);
    for (int i = 0; i < 64; ++i) {
        const double t = 2.0 * kPi * i / (64.0 * w);
        const double near = vector_potential_near({r, t}, d);
        const double exact = vector_potential_exact({r, t}, d);
        CHECK(std::abs(exact - near) <= 1e-6 * amplitude);
    }
}

TEST_CASE("exact potential degenerates gracefully") {
    const auto d = drive_from_flux(1e-15, 1e-3, 0.0);
    CHECK(vector_potential_exact({0.02, 5.0}, d) == vector_potential_near({0.02, 5.0}, d));
    const auto tiny = d.with_omega(1e-9);
    const double near0 = vector_potential_near({0.02, 0.0}, d);
    CHECK(std::abs(vector_potential_exact({0.02, 0.0}, tiny) - near0) <= 1e-6 * std::abs(near0));
    const auto off = make_drive(0.0, 1e-3, 10.0, 1.0);
    CHECK(vector_potential_exact({0.02, 0.3}, off) == 0.0);
}

TEST_CASE("exact-to-near deviation shrinks like (wr/c)^2 |ln(wr/c)|") {
    const double r = 0.02;
    double worst_c = 0.0;
    for (double x = 1e-6; x <= 1e-2; x *= 10.0) {
        const double w = x * kK.c / r;
        const auto d = drive_from_flux(1e-15, r / 4.0, w);
        const double amplitude = d.lambda_flux() / (2.0 * kPi * r);
        double sup = 0.0;
        for (int i = 0; i < 32; ++i) {
            const double t = 2.0 * kPi * (i + 0.5) / (32.0 * w);
            sup = std::max(sup, std::abs(vector_potential_exact({r, t}, d) - vector_potential_near({r, t}, d)) / amplitude);
        }
        worst_c = std::max(worst_c, sup / (x * x * std::abs(std::log(x))));
    }
    // Fitted constant: the leading corrections are (x^2/2) ln x and pi x^2 / 4.
    CHECK(worst_c < 2.0);
}
