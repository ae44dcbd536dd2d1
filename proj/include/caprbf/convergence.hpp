//
// caprbf/convergence.hpp
// Error metrics over the evaluation grid and on the boundary, estimated
// orders of convergence, and the sweep drivers that produce the
// interior/boundary convergence tables.
//
#pragma once

#include "caprbf/franke.hpp"
#include "caprbf/geometry.hpp"
#include "caprbf/pointsets.hpp"

#include <cmath>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace caprbf {

// Normalized interior L2 error by the midpoint rule:
//   sqrt( (1/area) * sum_nodes cell_weight * sin(theta) * |exact - approx|^2 ).
// For the reference cap of radius pi/3 the area is exactly pi and the
// weight equals 2*pi^2 / (3 |grid|).
double interior_l2_error(const EvaluationGrid& grid, const SphericalCap& cap,
                         const SurfaceFunction& exact, const SurfaceFunction& approx);

// Max |exact - approx| over n_samples equispaced boundary points.
double boundary_sup_error(const SphericalCap& cap, std::size_t n_samples,
                          const SurfaceFunction& exact, const SurfaceFunction& approx);

// EOC_k = ln(e_{k-1}/e_k) / ln(h_{k-1}/h_k), k = 1..len-1. Requires
// equal lengths >= 2 and positive entries.
std::vector<double> estimated_orders(const std::vector<double>& errors,
                                     const std::vector<double>& mesh_norms);

enum class SweepKind { interior, boundary };

struct StudyConfig {
    SweepKind sweep{SweepKind::interior};
    std::vector<std::size_t> counts;        // swept counts (M or K)
    std::size_t fixed_count{200};           // the other family's count
    double cap_radius{M_PI / 3.0};
    double kappa{1.0};
    double regularize_eps{0.0};
    std::size_t grid_n_theta{67};
    std::size_t grid_n_phi{200};
    std::size_t boundary_samples{3000};
    std::size_t mesh_sample_n_theta{400};
    std::size_t mesh_sample_n_phi{1200};
};

struct StudyRow {
    std::size_t interior_count{0};
    std::size_t boundary_count{0};
    double h_interior{0.0};
    double h_boundary{0.0};
    double l2_error{0.0};
    double sup_error{0.0};
    std::optional<double> eoc_l2;
    std::optional<double> eoc_sup;
    bool ok{false};
    std::string message;   // failure detail for rows that did not solve
};

struct ConvergenceReport {
    std::vector<StudyRow> rows;
    // metadata
    std::string kernel_name{"wendland_c6"};
    SweepKind sweep{SweepKind::interior};
    double kappa{1.0};
    double cap_radius{M_PI / 3.0};
    std::size_t grid_n_theta{67};
    std::size_t grid_n_phi{200};
    double regularize_eps{0.0};
};

// Runs the full sweep against the Franke problem: generate points,
// assemble, solve, measure both errors and both mesh norms, fill the
// EOC column of the swept family. Solver failures mark the row and the
// sweep continues.
ConvergenceReport run_convergence_study(const StudyConfig& config);

// One row per sweep entry; error columns in 4-digit scientific form,
// EOC to two decimals, blank where undefined.
void write_report_csv(std::ostream& out, const ConvergenceReport& report);

// Full-precision twin of the CSV, including metadata.
std::string report_to_json(const ConvergenceReport& report);

} // namespace caprbf
