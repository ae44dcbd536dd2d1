//
// caprbf/geometry.hpp
// Points on the unit sphere, spherical caps, distances and mesh norms.
//
#pragma once

#include <cstddef>
#include <vector>

namespace caprbf {

// A point on the unit sphere S^2. Construction normalizes, so the
// invariant |x|^2 + |y|^2 + |z|^2 = 1 holds to within ~1 ulp.
struct SurfacePoint {
    double x{0.0};
    double y{0.0};
    double z{1.0};

    SurfacePoint() = default;
    SurfacePoint(double px, double py, double pz);
};

double dot(const SurfacePoint& p, const SurfacePoint& q);

// Geodesic distance arccos(p.q) in [0, pi]. The dot product is clamped
// to [-1, 1] so rounding never produces NaN.
double geodesic_distance(const SurfacePoint& p, const SurfacePoint& q);

// Euclidean chord length |p - q| = sqrt(2 - 2 p.q) in [0, 2].
double chord_distance(const SurfacePoint& p, const SurfacePoint& q);

// Open spherical cap: all points within geodesic distance `radius` of
// `center`, radius strictly inside (0, pi).
class SphericalCap {
public:
    SphericalCap(const SurfacePoint& center, double radius);

    const SurfacePoint& center() const { return center_; }
    double radius() const { return radius_; }

    // Area 2*pi*(1 - cos(radius)).
    double area() const;

    bool contains(const SurfacePoint& p) const;
    bool on_boundary(const SurfacePoint& p, double angle_tol = 1e-12) const;

private:
    SurfacePoint center_;
    double radius_;
};

// Orthonormal tangent frame at a point, chosen deterministically. Maps
// local cap coordinates (colatitude theta from the center, azimuth phi)
// to points on the sphere.
struct TangentFrame {
    SurfacePoint e1;
    SurfacePoint e2;
    SurfacePoint pole;
};

TangentFrame tangent_frame(const SurfacePoint& center);

SurfacePoint point_from_cap_coords(const TangentFrame& frame, double theta, double phi);

// Azimuth of p in the frame, in [0, 2*pi).
double cap_azimuth(const TangentFrame& frame, const SurfacePoint& p);

// Collocation point sets: interior points strictly inside the cap,
// boundary points on the cap's boundary circle.
struct PointSet {
    std::vector<SurfacePoint> interior;
    std::vector<SurfacePoint> boundary;

    std::size_t size() const { return interior.size() + boundary.size(); }
};

// Checks membership and pairwise separation (> 1e-10); throws
// std::invalid_argument on violation.
void validate_point_set(const PointSet& points, const SphericalCap& cap);

// Fill distance of the interior set over the cap, estimated by a dense
// deterministic (theta, phi) sample. A lower bound on the true sup that
// converges as the sampling refines.
double mesh_norm_interior(const PointSet& points, const SphericalCap& cap,
                          std::size_t sample_n_theta = 400,
                          std::size_t sample_n_phi = 1200);

// Fill distance of the boundary set along the boundary circle: half the
// largest azimuthal gap times sin(radius). Exact (computed by sorting
// azimuths).
double mesh_norm_boundary(const PointSet& points, const SphericalCap& cap);

} // namespace caprbf
