#include "abfringe/specfun.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace abfringe::specfun;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// 30-digit reference values (mpmath) for x, J1(x), Y1(x).
struct Ref {
    double x, j1, y1;
};
constexpr Ref kRefs[] = {
    {0.5, 0.24226845767487388639, -1.4714723926702430692},
    {1.0, 0.44005058574493351596, -0.78121282130028871655},
    {2.0, 0.57672480775687338720, -0.10703243154093754689},
    {5.0, -0.32757913759146522204, 0.14786314339122684480},
    {10.0, 0.043472746168861436670, 0.24901542420695388392},
    {15.0, 0.20510403861352276115, 0.021073628036873511940},
    {20.0, 0.066833124175850045579, -0.16551161436252129586},
    {25.0, -0.12535024958028990465, -0.098829964783237410053},
    {30.0, -0.11875106261662293652, 0.084425570661747234891},
    {40.0, 0.12603831803758499921, -0.0057935058215496329412},
    {50.0, -0.097511828125175137661, -0.056795668562014767942},
};

} // namespace

TEST_CASE("J1 examples") {
    CHECK(bessel_j1(0.0) == 0.0);
    CHECK(rel(bessel_j1(1.0), oracle::j1_series(1.0)) < 1e-12);
    CHECK(bessel_j1(1.0) == doctest::Approx(0.4400505857).epsilon(1e-10));
    CHECK(bessel_j1(-1.0) == -bessel_j1(1.0));
}

TEST_CASE("Y1 examples") {
    CHECK(bessel_y1(1.0) == doctest::Approx(-0.7812128213).epsilon(1e-10));
    const double small = bessel_y1(1e-4);
    CHECK(rel(small, -2.0 / (std::numbers::pi * 1e-4)) < 1e-7);
    CHECK(small == doctest::Approx(-6366.198036455761).epsilon(1e-12));
    CHECK_THROWS_AS(bessel_y1(0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_y1(-1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_y0(0.0), std::domain_error);
}

TEST_CASE("J1 and Y1 against the 30-digit table") {
    for (const auto& r : kRefs) {
        CAPTURE(r.x);
        CHECK(rel(bessel_j1(r.x), r.j1) < 1e-10);
        CHECK(rel(bessel_y1(r.x), r.y1) < 1e-10);
    }
}

TEST_CASE("J1 against the series oracle and Bessel's integral") {
    for (double x = 0.05; x <= 20.0; x *= 1.13) {
        CAPTURE(x);
        const double j = bessel_j1(x);
        const double scale = std::max(std::abs(j), 1e-3);
        CHECK(std::abs(j - oracle::j1_series(x)) / scale < 1e-10);
        CHECK(std::abs(j - oracle::jn_integral(1, x)) / scale < 1e-10);
    }
    for (double x = 20.0; x <= 50.0; x += 1.7) {
        CAPTURE(x);
        CHECK(std::abs(bessel_j1(x) - oracle::jn_integral(1, x)) < 1e-12);
        CHECK(std::abs(bessel_j0(x) - oracle::jn_integral(0, x)) < 1e-12);
    }
}

TEST_CASE("Y0 and Y1 against the integral representation") {
    for (double x : {0.1, 0.5, 1.0, 3.0, 7.5, 12.0, 19.0, 21.0, 33.0}) {
        CAPTURE(x);
        CHECK(std::abs(bessel_y1(x) - oracle::yn_integral(1, x)) < 1e-11 * std::max(1.0, std::abs(bessel_y1(x))));
        CHECK(std::abs(bessel_y0(x) - oracle::yn_integral(0, x)) < 1e-11 * std::max(1.0, std::abs(bessel_y0(x))));
    }
}

TEST_CASE("series and asymptotic branches meet at the switchover") {
    // The jump across the boundary stays inside the 1e-10 relative accuracy contract.
    const double below = std::nextafter(kSeriesLimit, 0.0);
    const double above = std::nextafter(kSeriesLimit, 100.0);
    CHECK(rel(bessel_j1(below), bessel_j1(above)) < 1e-10);
    CHECK(rel(bessel_y1(below), bessel_y1(above)) < 1e-10);
    CHECK(rel(bessel_j0(below), bessel_j0(above)) < 1e-10);
    CHECK(rel(bessel_y0(below), bessel_y0(above)) < 1e-10);
}

TEST_CASE("Wronskian J1 Y1' - J1' Y1 = 2 / (pi x)") {
    // Z1' = Z0 - Z1 / x
    for (double x = 0.1; x <= 30.0; x *= 1.05) {
        CAPTURE(x);
        const double j1 = bessel_j1(x), y1 = bessel_y1(x);
        const double dj1 = bessel_j0(x) - j1 / x;
        const double dy1 = bessel_y0(x) - y1 / x;
        const double w = j1 * dy1 - dj1 * y1;
        CHECK(rel(w, 2.0 / (std::numbers::pi * x)) < 1e-8);
    }
}

TEST_CASE("J1 is odd, J0 even") {
    for (double x : {0.3, 4.0, 17.0, 35.0}) {
        CHECK(bessel_j1(-x) == -bessel_j1(x));
        CHECK(bessel_j0(-x) == bessel_j0(x));
    }
}
