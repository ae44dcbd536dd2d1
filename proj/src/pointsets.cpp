#include "caprbf/pointsets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace caprbf {

namespace {

double zone_cos_clamped(double c) { return std::clamp(c, -1.0, 1.0); }

} // namespace

std::vector<SurfacePoint> generate_cap_points(const SphericalCap& cap, std::size_t count) {
    if (count == 0) {
        throw std::invalid_argument("generate_cap_points: count must be >= 1");
    }
    const TangentFrame frame = tangent_frame(cap.center());
    std::vector<SurfacePoint> pts;
    pts.reserve(count);
    pts.push_back(cap.center());
    if (count == 1) return pts;

    const double total_area = cap.area();
    const double ideal_spacing = std::sqrt(total_area / static_cast<double>(count));
    if (ideal_spacing < 1e-8) {
        throw std::invalid_argument(
            "generate_cap_points: cap too small to separate the requested point count");
    }

    // Interior points stay strictly inside the open cap: inset the
    // outermost ring by half a collar width from the rim.
    const double theta_edge = cap.radius() - 0.5 * ideal_spacing;
    if (theta_edge <= 0.0) {
        // Degenerate budget for a tiny cap: cluster rings inside whatever
        // room is left.
        throw std::invalid_argument("generate_cap_points: cap too small for the point count");
    }
    const double usable_area = 2.0 * M_PI * (1.0 - std::cos(theta_edge));
    const double cell_area = usable_area / static_cast<double>(count);

    // Central disc holds the single center point.
    const double cos_disc = zone_cos_clamped(1.0 - cell_area / (2.0 * M_PI));
    const double theta_disc = std::acos(cos_disc);

    const std::size_t n_collars = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround((theta_edge - theta_disc) / std::sqrt(cell_area))));

    // Provisional equal-width collars; budgets proportional to collar
    // areas with largest-remainder rounding so they sum to count - 1.
    std::vector<double> quota(n_collars);
    {
        const double width = (theta_edge - theta_disc) / static_cast<double>(n_collars);
        for (std::size_t i = 0; i < n_collars; ++i) {
            const double t0 = theta_disc + width * static_cast<double>(i);
            const double t1 = theta_disc + width * static_cast<double>(i + 1);
            quota[i] = 2.0 * M_PI * (std::cos(t0) - std::cos(t1)) / cell_area;
        }
    }
    std::vector<std::size_t> budget(n_collars);
    std::vector<double> remainder(n_collars);
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < n_collars; ++i) {
        budget[i] = static_cast<std::size_t>(std::floor(quota[i]));
        remainder[i] = quota[i] - std::floor(quota[i]);
        assigned += budget[i];
    }
    std::vector<std::size_t> order(n_collars);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
    const std::size_t target = count - 1;
    for (std::size_t k = 0; assigned < target; ++k) {
        budget[order[k % n_collars]] += 1;
        ++assigned;
    }
    while (assigned > target) {
        // Possible only through floor(quota) over-summing via rounding;
        // trim from the largest collar.
        auto it = std::max_element(budget.begin(), budget.end());
        if (*it == 0) break;
        *it -= 1;
        --assigned;
    }

    // Re-fit collar boundaries so collar i holds exactly budget[i] cells
    // of area cell_area: every cell in the partition has identical area.
    double cos_prev = cos_disc;
    for (std::size_t i = 0; i < n_collars; ++i) {
        const std::size_t k = budget[i];
        const double cos_next =
            zone_cos_clamped(cos_prev - static_cast<double>(k) * cell_area / (2.0 * M_PI));
        if (k == 0) {
            cos_prev = cos_next;
            continue;
        }
        // Ring at the area median of its collar.
        const double cos_ring =
            zone_cos_clamped(cos_prev - 0.5 * static_cast<double>(k) * cell_area / (2.0 * M_PI));
        const double theta_ring = std::acos(cos_ring);
        const double offset = (i % 2 == 1) ? 0.5 : 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            const double phi = 2.0 * M_PI * (static_cast<double>(j) + offset) / static_cast<double>(k);
            pts.push_back(point_from_cap_coords(frame, theta_ring, phi));
        }
        cos_prev = cos_next;
    }

    if (pts.size() != count) {
        throw std::logic_error("generate_cap_points: internal budget mismatch");
    }
    return pts;
}

std::vector<SurfacePoint> generate_boundary_points(const SphericalCap& cap, std::size_t count) {
    if (count == 0) {
        throw std::invalid_argument("generate_boundary_points: count must be >= 1");
    }
    const TangentFrame frame = tangent_frame(cap.center());
    std::vector<SurfacePoint> pts;
    pts.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double phi = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(count);
        pts.push_back(point_from_cap_coords(frame, cap.radius(), phi));
    }
    return pts;
}

EvaluationGrid generate_eval_grid(const SphericalCap& cap, std::size_t n_theta, std::size_t n_phi) {
    if (n_theta == 0 || n_phi == 0) {
        throw std::invalid_argument("generate_eval_grid: grid counts must be >= 1");
    }
    const TangentFrame frame = tangent_frame(cap.center());
    EvaluationGrid grid;
    grid.n_theta = n_theta;
    grid.n_phi = n_phi;
    grid.cell_weight =
        (cap.radius() * 2.0 * M_PI) / (static_cast<double>(n_theta) * static_cast<double>(n_phi));
    grid.nodes.reserve(n_theta * n_phi);
    for (std::size_t i = 0; i < n_theta; ++i) {
        const double theta = (static_cast<double>(i) + 0.5) * cap.radius() / static_cast<double>(n_theta);
        for (std::size_t j = 0; j < n_phi; ++j) {
            const double phi = (static_cast<double>(j) + 0.5) * 2.0 * M_PI / static_cast<double>(n_phi);
            grid.nodes.push_back(GridNode{theta, phi, point_from_cap_coords(frame, theta, phi)});
        }
    }
    return grid;
}

void write_points_csv(std::ostream& out, const PointSet& points) {
    out << "x,y,z,kind\n";
    char buf[96];
    for (const auto& p : points.interior) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,interior\n", p.x, p.y, p.z);
        out << buf;
    }
    for (const auto& p : points.boundary) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,boundary\n", p.x, p.y, p.z);
        out << buf;
    }
}

PointSet read_points_csv(std::istream& in) {
    PointSet points;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (lineno == 1 && line.rfind("x,", 0) == 0) continue;  // header
        std::istringstream ss(line);
        std::string fx, fy, fz, kind;
        if (!std::getline(ss, fx, ',') || !std::getline(ss, fy, ',') ||
            !std::getline(ss, fz, ',') || !std::getline(ss, kind)) {
            throw std::runtime_error("read_points_csv: malformed line " + std::to_string(lineno));
        }
        const SurfacePoint p(std::stod(fx), std::stod(fy), std::stod(fz));
        if (kind == "interior") {
            points.interior.push_back(p);
        } else if (kind == "boundary") {
            points.boundary.push_back(p);
        } else {
            throw std::runtime_error("read_points_csv: unknown kind '" + kind + "' on line " +
                                     std::to_string(lineno));
        }
    }
    return points;
}

} // namespace caprbf
