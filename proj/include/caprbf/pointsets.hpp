//
// caprbf/pointsets.hpp
// Deterministic point generation: equal-area interior sets on a cap,
// equispaced boundary circles, and the quadrature grid for error metrics.
//
#pragma once

#include "caprbf/geometry.hpp"

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace caprbf {

struct GridNode {
    double theta;   // colatitude in the cap frame, (0, cap radius)
    double phi;     // azimuth in the cap frame, (0, 2*pi)
    SurfacePoint point;
};

// Midpoint-rule grid over the open cap. cell_weight is the uniform
// (theta, phi) cell measure; the area element sin(theta) is applied by
// the quadrature, not stored here.
struct EvaluationGrid {
    std::vector<GridNode> nodes;
    double cell_weight{0.0};
    std::size_t n_theta{0};
    std::size_t n_phi{0};
};

// Exactly `count` distinct points strictly inside the cap, arranged as a
// center point plus concentric rings. Ring budgets are proportional to
// collar areas (largest-remainder rounding) and collar boundaries are
// re-fit so every cell has identical area; azimuthal offsets alternate
// between rings. Deterministic.
std::vector<SurfacePoint> generate_cap_points(const SphericalCap& cap, std::size_t count);

// `count` points on the boundary circle at azimuths 2*pi*k/count in the
// cap's tangent frame.
std::vector<SurfacePoint> generate_boundary_points(const SphericalCap& cap, std::size_t count);

EvaluationGrid generate_eval_grid(const SphericalCap& cap,
                                  std::size_t n_theta = 67,
                                  std::size_t n_phi = 200);

// CSV rows `x,y,z,kind` with kind in {interior, boundary}; coordinates
// round-trip at full precision.
void write_points_csv(std::ostream& out, const PointSet& points);
PointSet read_points_csv(std::istream& in);

} // namespace caprbf
