#include "caprbf/pointsets.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <map>
#include <sstream>

using namespace caprbf;

namespace {
const SurfacePoint kNorth(0.0, 0.0, 1.0);
const SphericalCap kCap(kNorth, M_PI / 3.0);
} // namespace

TEST_CASE("generate_cap_points returns exactly the requested count") {
    for (std::size_t m = 1; m <= 256; ++m) {
        CHECK(generate_cap_points(kCap, m).size() == m);
    }
    for (std::size_t m : {500, 777, 1000, 2500, 5000}) {
        const auto pts = generate_cap_points(kCap, m);
        CHECK(pts.size() == m);
        for (const auto& p : pts) CHECK(kCap.contains(p));
    }
    CHECK_THROWS_AS(generate_cap_points(kCap, 0), std::invalid_argument);
}

TEST_CASE("generate_cap_points single point sits at the cap center") {
    const auto pts = generate_cap_points(kCap, 1);
    REQUIRE(pts.size() == 1);
    CHECK(geodesic_distance(pts[0], kCap.center()) <= 1e-15);
}

TEST_CASE("generated points keep a minimum pairwise separation") {
    for (std::size_t m : {2, 10, 97, 200, 500, 1000}) {
        const auto pts = generate_cap_points(kCap, m);
        const double floor = 0.3 * std::sqrt(kCap.area() / static_cast<double>(m));
        double min_sep = M_PI;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                min_sep = std::min(min_sep, geodesic_distance(pts[i], pts[j]));
            }
        }
        CHECK(min_sep >= floor);
    }
}

TEST_CASE("generation is deterministic") {
    const auto a = generate_cap_points(kCap, 300);
    const auto b = generate_cap_points(kCap, 300);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].x == b[i].x);
        CHECK(a[i].y == b[i].y);
        CHECK(a[i].z == b[i].z);
    }
}

TEST_CASE("cells of the partition have equal area") {
    // Rings sit at the area median of their collar and collars hold
    // budget * cell_area exactly, so ring colatitudes must satisfy
    //   cos(theta_i) = 1 - c/(2 pi) * (1 + sum_{j<i} k_j + k_i / 2)
    // for a single cell area c. Fit c from the first ring and check the
    // relation for every other ring via the zone-area formula.
    const std::size_t m = 700;
    const auto pts = generate_cap_points(kCap, m);

    std::map<double, std::size_t> rings;   // colatitude -> budget
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double theta = geodesic_distance(pts[i], kCap.center());
        bool found = false;
        for (auto& [t, k] : rings) {
            if (std::abs(t - theta) < 1e-9) {
                ++k;
                found = true;
                break;
            }
        }
        if (!found) rings[theta] = 1;
    }
    REQUIRE(rings.size() >= 3);

    std::vector<std::pair<double, std::size_t>> ordered(rings.begin(), rings.end());
    const double c_fit = (1.0 - std::cos(ordered[0].first)) * 2.0 * M_PI /
                         (1.0 + 0.5 * static_cast<double>(ordered[0].second));
    std::size_t cumulative = 0;
    for (const auto& [theta, k] : ordered) {
        const double expected_cos =
            1.0 - c_fit / (2.0 * M_PI) *
                      (1.0 + static_cast<double>(cumulative) + 0.5 * static_cast<double>(k));
        CHECK(std::cos(theta) == doctest::Approx(expected_cos).epsilon(1e-10));
        cumulative += k;
    }
}

TEST_CASE("interior mesh norm magnitude for the reference cap" * doctest::timeout(120)) {
    PointSet points;
    points.interior = generate_cap_points(kCap, 500);
    const double h = mesh_norm_interior(points, kCap);
    CHECK(h >= 0.0733 / 1.3);
    CHECK(h <= 0.0733 * 1.3);
}

TEST_CASE("doubling the interior count shrinks the mesh norm like M^-1/2" *
          doctest::timeout(300)) {
    std::vector<double> hs;
    for (std::size_t m : {500, 1000, 2000, 4000}) {
        PointSet points;
        points.interior = generate_cap_points(kCap, m);
        hs.push_back(mesh_norm_interior(points, kCap));
    }
    for (std::size_t i = 0; i + 1 < hs.size(); ++i) {
        const double ratio = hs[i] / hs[i + 1];
        CHECK(ratio >= 1.25);
        CHECK(ratio <= 1.65);
    }
}

TEST_CASE("boundary points are equispaced on the rim") {
    const auto pts = generate_boundary_points(kCap, 100);
    REQUIRE(pts.size() == 100);
    PointSet points;
    points.boundary = pts;
    for (const auto& p : pts) CHECK(kCap.on_boundary(p));
    CHECK(mesh_norm_boundary(points, kCap) ==
          doctest::Approx(M_PI * std::sin(M_PI / 3.0) / 100.0).epsilon(1e-12));
    CHECK_THROWS_AS(generate_boundary_points(kCap, 0), std::invalid_argument);
}

TEST_CASE("four boundary points on the equatorial cap are the axis points") {
    const SphericalCap hemisphere(kNorth, M_PI / 2.0);
    const auto pts = generate_boundary_points(hemisphere, 4);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].x == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(pts[0].z) <= 1e-15);
    CHECK(pts[1].y == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pts[2].x == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(pts[3].y == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("boundary mesh norm reference values from the generator") {
    PointSet p100, p800;
    p100.boundary = generate_boundary_points(kCap, 100);
    p800.boundary = generate_boundary_points(kCap, 800);
    CHECK(mesh_norm_boundary(p100, kCap) == doctest::Approx(0.0272).epsilon(2e-3));
    CHECK(mesh_norm_boundary(p800, kCap) == doctest::Approx(0.0034).epsilon(5e-2));
}

TEST_CASE("evaluation grid layout") {
    const EvaluationGrid grid = generate_eval_grid(kCap);
    CHECK(grid.nodes.size() == 13400);
    CHECK(grid.n_theta == 67);
    CHECK(grid.n_phi == 200);
    // cell sizes approximately 0.9 by 1.8 degrees
    const double dtheta_deg = (kCap.radius() / 67.0) * 180.0 / M_PI;
    const double dphi_deg = (2.0 * M_PI / 200.0) * 180.0 / M_PI;
    CHECK(dtheta_deg == doctest::Approx(0.8955).epsilon(1e-3));
    CHECK(dphi_deg == doctest::Approx(1.8).epsilon(1e-12));
    for (const auto& node : grid.nodes) CHECK(kCap.contains(node.point));

    const EvaluationGrid single = generate_eval_grid(kCap, 1, 1);
    REQUIRE(single.nodes.size() == 1);
    CHECK(single.nodes[0].theta == doctest::Approx(kCap.radius() / 2.0));
    CHECK(single.nodes[0].phi == doctest::Approx(M_PI));

    CHECK_THROWS_AS(generate_eval_grid(kCap, 0, 10), std::invalid_argument);
    CHECK_THROWS_AS(generate_eval_grid(kCap, 10, 0), std::invalid_argument);
}

TEST_CASE("midpoint rule reproduces the cap area") {
    const EvaluationGrid grid = generate_eval_grid(kCap);
    double area = 0.0;
    for (const auto& node : grid.nodes) area += grid.cell_weight * std::sin(node.theta);
    CHECK(area == doctest::Approx(kCap.area()).epsilon(1e-3));
    CHECK(kCap.area() == doctest::Approx(M_PI).epsilon(1e-15));
}

TEST_CASE("point set CSV round trip is exact") {
    PointSet points;
    points.interior = generate_cap_points(kCap, 57);
    points.boundary = generate_boundary_points(kCap, 13);

    std::stringstream buf;
    write_points_csv(buf, points);
    const PointSet back = read_points_csv(buf);

    REQUIRE(back.interior.size() == points.interior.size());
    REQUIRE(back.boundary.size() == points.boundary.size());
    for (std::size_t i = 0; i < points.interior.size(); ++i) {
        CHECK(back.interior[i].x == points.interior[i].x);
        CHECK(back.interior[i].y == points.interior[i].y);
        CHECK(back.interior[i].z == points.interior[i].z);
    }
    for (std::size_t i = 0; i < points.boundary.size(); ++i) {
        CHECK(back.boundary[i].z == points.boundary[i].z);
    }

    std::stringstream bad("x,y,z,kind\n0.1,0.2\n");
    CHECK_THROWS(read_points_csv(bad));
}
