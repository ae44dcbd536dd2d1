#include "caprbf/franke.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace caprbf;

namespace {

const SurfacePoint kNorth(0.0, 0.0, 1.0);
const SphericalCap kCap(kNorth, M_PI / 3.0);

// 4th-order central differences of the colatitude/longitude form
//   u_tt + cot(theta) u_t + u_pp / sin^2(theta)
// in long double; valid away from the poles.
long double fd_surface_laplacian(double theta, double phi, long double h = 1e-3L) {
    auto u = [](long double th, long double ph) {
        const double st = static_cast<double>(std::sin(th));
        return static_cast<long double>(franke_u(SurfacePoint(
            st * static_cast<double>(std::cos(ph)), st * static_cast<double>(std::sin(ph)),
            static_cast<double>(std::cos(th)))));
    };
    const long double t = theta, p = phi;
    const long double ut =
        (-u(t + 2 * h, p) + 8 * u(t + h, p) - 8 * u(t - h, p) + u(t - 2 * h, p)) / (12 * h);
    const long double utt = (-u(t + 2 * h, p) + 16 * u(t + h, p) - 30 * u(t, p) +
                             16 * u(t - h, p) - u(t - 2 * h, p)) /
                            (12 * h * h);
    const long double upp = (-u(t, p + 2 * h) + 16 * u(t, p + h) - 30 * u(t, p) +
                             16 * u(t, p - h) - u(t, p - 2 * h)) /
                            (12 * h * h);
    const long double st = std::sin(t);
    return utt + std::cos(t) / st * ut + upp / (st * st);
}

} // namespace

TEST_CASE("franke value with a vanishing first exponent") {
    const double x = 2.0 / 9.0, y = 2.0 / 9.0;
    const double z = std::sqrt(1.0 - x * x - y * y);
    const SurfacePoint p(x, y, z);
    // remaining three terms straight from the formula
    const double rest = 0.75 * std::exp(-(3.0 * 3.0) / 49.0 - 3.0 / 10.0) +
                        0.5 * std::exp(-(5.0 * 5.0 + 1.0) / 4.0) -
                        0.2 * std::exp(-(2.0 * 2.0) - (5.0 * 5.0));
    CHECK(franke_u(p) == doctest::Approx(0.75 + rest).epsilon(1e-15));
}

TEST_CASE("franke is independent of the z coordinate") {
    oracles::Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const SurfacePoint p = rng.sphere_point();
        const SurfacePoint mirror(p.x, p.y, -p.z);
        CHECK(franke_u(p) == franke_u(mirror));
    }
}

TEST_CASE("franke value at the north pole") {
    const double expected = 0.75 * std::exp(-2.0) + 0.75 * std::exp(-1.0 / 49.0 - 1.0 / 10.0) +
                            0.5 * std::exp(-58.0 / 4.0) - 0.2 * std::exp(-65.0);
    CHECK(franke_u(kNorth) == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("ambient identity reproduces spherical harmonic eigenvalues") {
    AmbientFunction constant{
        [](double, double, double) { return 3.5; },
        [](double, double, double) { return std::array<double, 3>{0.0, 0.0, 0.0}; },
        [](double, double, double) { return std::array<double, 6>{0, 0, 0, 0, 0, 0}; },
    };
    AmbientFunction coord_z{
        [](double, double, double z) { return z; },
        [](double, double, double) { return std::array<double, 3>{0.0, 0.0, 1.0}; },
        [](double, double, double) { return std::array<double, 6>{0, 0, 0, 0, 0, 0}; },
    };
    AmbientFunction xy{
        [](double x, double y, double) { return x * y; },
        [](double x, double y, double) { return std::array<double, 3>{y, x, 0.0}; },
        [](double, double, double) { return std::array<double, 6>{0, 0, 0, 1.0, 0, 0}; },
    };

    oracles::Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        const SurfacePoint p = rng.sphere_point();
        CHECK(std::abs(surface_laplacian(constant, p)) <= 1e-12);
        // degree-1 harmonic: eigenvalue 1*(1+1) = 2
        CHECK(surface_laplacian(coord_z, p) == doctest::Approx(-2.0 * p.z).epsilon(1e-10));
        // degree-2 harmonic: eigenvalue 2*(2+1) = 6
        CHECK(surface_laplacian(xy, p) ==
              doctest::Approx(-6.0 * p.x * p.y).scale(1.0).epsilon(1e-10));
    }
}

TEST_CASE("franke surface laplacian agrees with the coordinate-form oracle") {
    oracles::Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        // away from the pole, inside the cap
        const double theta = rng.uniform(0.15, M_PI / 3.0);
        const double phi = rng.uniform(0.0, 2.0 * M_PI);
        const SurfacePoint p(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                             std::cos(theta));
        const double fd = static_cast<double>(fd_surface_laplacian(theta, phi));
        CHECK(franke_surface_laplacian(p) == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("franke problem wiring") {
    const OperatorL op{1.0};
    const DirichletProblem problem = make_franke_problem(kCap, op);

    SUBCASE("forcing is consistent with the operator") {
        oracles::Rng rng(37);
        for (int i = 0; i < 50; ++i) {
            const SurfacePoint p = rng.cap_point(kCap);
            const double f = problem.forcing(p);
            CHECK(f + franke_surface_laplacian(p) - franke_u(p) ==
                  doctest::Approx(0.0).scale(std::abs(f) + 1.0).epsilon(1e-12));
        }
    }

    SUBCASE("boundary data is the trace of the exact solution") {
        const auto frame = tangent_frame(kCap.center());
        const SurfacePoint rim = point_from_cap_coords(frame, kCap.radius(), 0.0);
        CHECK(problem.boundary_data(rim) == franke_u(rim));
        CHECK(problem.exact_solution(rim) == franke_u(rim));
    }

    SUBCASE("forcing is finite at the pole and matches the oracle just off it") {
        const double f_pole = problem.forcing(kNorth);
        CHECK(std::isfinite(f_pole));
        // the coordinate expression is singular at theta = 0; compare at
        // theta = 1e-3 where the oracle is still usable
        const double theta = 1e-3;
        const SurfacePoint near_pole(std::sin(theta), 0.0, std::cos(theta));
        const double fd = static_cast<double>(fd_surface_laplacian(theta, 0.0, 1e-4L));
        CHECK(franke_surface_laplacian(near_pole) == doctest::Approx(fd).epsilon(1e-3));
        // continuity of f across the pole region
        CHECK(problem.forcing(near_pole) == doctest::Approx(f_pole).epsilon(1e-4));
    }
}
