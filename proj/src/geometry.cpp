#include "caprbf/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace caprbf {

SurfacePoint::SurfacePoint(double px, double py, double pz) {
    const double norm = std::sqrt(px * px + py * py + pz * pz);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw std::invalid_argument("SurfacePoint: cannot normalize zero or non-finite vector");
    }
    x = px / norm;
    y = py / norm;
    z = pz / norm;
}

double dot(const SurfacePoint& p, const SurfacePoint& q) {
    return p.x * q.x + p.y * q.y + p.z * q.z;
}

double geodesic_distance(const SurfacePoint& p, const SurfacePoint& q) {
    return std::acos(std::clamp(dot(p, q), -1.0, 1.0));
}

double chord_distance(const SurfacePoint& p, const SurfacePoint& q) {
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * dot(p, q)));
}

SphericalCap::SphericalCap(const SurfacePoint& center, double radius)
    : center_(center), radius_(radius) {
    if (!(radius > 0.0) || !(radius < M_PI)) {
        throw std::invalid_argument("SphericalCap: radius must lie strictly in (0, pi), got " +
                                    std::to_string(radius));
    }
}

double SphericalCap::area() const {
    return 2.0 * M_PI * (1.0 - std::cos(radius_));
}

bool SphericalCap::contains(const SurfacePoint& p) const {
    return geodesic_distance(center_, p) < radius_;
}

bool SphericalCap::on_boundary(const SurfacePoint& p, double angle_tol) const {
    return std::abs(geodesic_distance(center_, p) - radius_) <= angle_tol;
}

TangentFrame tangent_frame(const SurfacePoint& center) {
    // Pick the coordinate axis least aligned with the center, then
    // Gram-Schmidt. Deterministic for any center.
    double ax = std::abs(center.x), ay = std::abs(center.y), az = std::abs(center.z);
    double hx = 0.0, hy = 0.0, hz = 0.0;
    if (ax <= ay && ax <= az) {
        hx = 1.0;
    } else if (ay <= az) {
        hy = 1.0;
    } else {
        hz = 1.0;
    }
    const double proj = hx * center.x + hy * center.y + hz * center.z;
    const SurfacePoint e1(hx - proj * center.x, hy - proj * center.y, hz - proj * center.z);
    // e2 = center x e1
    const SurfacePoint e2(center.y * e1.z - center.z * e1.y,
                          center.z * e1.x - center.x * e1.z,
                          center.x * e1.y - center.y * e1.x);
    return TangentFrame{e1, e2, center};
}

SurfacePoint point_from_cap_coords(const TangentFrame& frame, double theta, double phi) {
    const double st = std::sin(theta), ct = std::cos(theta);
    const double cp = std::cos(phi), sp = std::sin(phi);
    return SurfacePoint(st * (cp * frame.e1.x + sp * frame.e2.x) + ct * frame.pole.x,
                        st * (cp * frame.e1.y + sp * frame.e2.y) + ct * frame.pole.y,
                        st * (cp * frame.e1.z + sp * frame.e2.z) + ct * frame.pole.z);
}

double cap_azimuth(const TangentFrame& frame, const SurfacePoint& p) {
    const double u = dot(p, frame.e1);
    const double v = dot(p, frame.e2);
    double phi = std::atan2(v, u);
    if (phi < 0.0) phi += 2.0 * M_PI;
    return phi;
}

void validate_point_set(const PointSet& points, const SphericalCap& cap) {
    for (const auto& p : points.interior) {
        if (!cap.contains(p)) {
            throw std::invalid_argument("PointSet: interior point lies outside the open cap");
        }
    }
    for (const auto& p : points.boundary) {
        if (!cap.on_boundary(p)) {
            throw std::invalid_argument("PointSet: boundary point is off the boundary circle");
        }
    }
    std::vector<const SurfacePoint*> all;
    all.reserve(points.size());
    for (const auto& p : points.interior) all.push_back(&p);
    for (const auto& p : points.boundary) all.push_back(&p);
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (geodesic_distance(*all[i], *all[j]) <= 1e-10) {
                throw std::invalid_argument("PointSet: points " + std::to_string(i) + " and " +
                                            std::to_string(j) + " are not distinct");
            }
        }
    }
}

double mesh_norm_interior(const PointSet& points, const SphericalCap& cap,
                          std::size_t sample_n_theta, std::size_t sample_n_phi) {
    if (points.interior.empty()) {
        throw std::invalid_argument("mesh_norm_interior: empty interior set");
    }
    const TangentFrame frame = tangent_frame(cap.center());
    const double dt = cap.radius() / static_cast<double>(sample_n_theta);
    const double dp = 2.0 * M_PI / static_cast<double>(sample_n_phi);

    // min distance == max dot product, so track the dot and take one
    // arccos at the end. Serial loops with a fixed order keep the result
    // independent of any threading above this call.
    double worst_best_dot = 1.0;
    for (std::size_t i = 0; i < sample_n_theta; ++i) {
        const double theta = (static_cast<double>(i) + 0.5) * dt;
        for (std::size_t j = 0; j < sample_n_phi; ++j) {
            const double phi = (static_cast<double>(j) + 0.5) * dp;
            const SurfacePoint s = point_from_cap_coords(frame, theta, phi);
            double best = -1.0;
            for (const auto& q : points.interior) {
                const double d = dot(s, q);
                if (d > best) best = d;
            }
            if (best < worst_best_dot) worst_best_dot = best;
        }
    }
    return std::acos(std::clamp(worst_best_dot, -1.0, 1.0));
}

double mesh_norm_boundary(const PointSet& points, const SphericalCap& cap) {
    if (points.boundary.empty()) {
        throw std::invalid_argument("mesh_norm_boundary: empty boundary set");
    }
    const TangentFrame frame = tangent_frame(cap.center());
    std::vector<double> az;
    az.reserve(points.boundary.size());
    for (const auto& p : points.boundary) az.push_back(cap_azimuth(frame, p));
    std::sort(az.begin(), az.end());
    double max_gap = 2.0 * M_PI - (az.back() - az.front());
    for (std::size_t i = 1; i < az.size(); ++i) {
        max_gap = std::max(max_gap, az[i] - az[i - 1]);
    }
    return 0.5 * max_gap * std::sin(cap.radius());
}

} // namespace caprbf
