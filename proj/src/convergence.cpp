#include "caprbf/convergence.hpp"

#include "caprbf/collocation.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace caprbf {

double interior_l2_error(const EvaluationGrid& grid, const SphericalCap& cap,
                         const SurfaceFunction& exact, const SurfaceFunction& approx) {
    if (grid.nodes.empty()) {
        throw std::invalid_argument("interior_l2_error: empty grid");
    }
    // Fixed summation order in node order.
    double acc = 0.0;
    for (const auto& node : grid.nodes) {
        const double d = exact(node.point) - approx(node.point);
        acc += grid.cell_weight * std::sin(node.theta) * d * d;
    }
    return std::sqrt(acc / cap.area());
}

double boundary_sup_error(const SphericalCap& cap, std::size_t n_samples,
                          const SurfaceFunction& exact, const SurfaceFunction& approx) {
    if (n_samples == 0) {
        throw std::invalid_argument("boundary_sup_error: need at least one sample");
    }
    const std::vector<SurfacePoint> samples = generate_boundary_points(cap, n_samples);
    double worst = 0.0;
    for (const auto& p : samples) {
        worst = std::max(worst, std::abs(exact(p) - approx(p)));
    }
    return worst;
}

std::vector<double> estimated_orders(const std::vector<double>& errors,
                                     const std::vector<double>& mesh_norms) {
    if (errors.size() != mesh_norms.size() || errors.size() < 2) {
        throw std::invalid_argument("estimated_orders: need equal lengths >= 2");
    }
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (!(errors[i] > 0.0) || !(mesh_norms[i] > 0.0)) {
            throw std::invalid_argument("estimated_orders: entries must be positive");
        }
    }
    std::vector<double> out;
    out.reserve(errors.size() - 1);
    for (std::size_t k = 1; k < errors.size(); ++k) {
        out.push_back(std::log(errors[k - 1] / errors[k]) /
                      std::log(mesh_norms[k - 1] / mesh_norms[k]));
    }
    return out;
}

ConvergenceReport run_convergence_study(const StudyConfig& config) {
    if (config.counts.empty()) {
        throw std::invalid_argument("run_convergence_study: empty sweep");
    }
    const SphericalCap cap(SurfacePoint(0.0, 0.0, 1.0), config.cap_radius);
    const OperatorL op{config.kappa};
    const DirichletProblem problem = make_franke_problem(cap, op);
    const KernelOperatorTable table = build_table(wendland_psi(), op);
    const EvaluationGrid grid = generate_eval_grid(cap, config.grid_n_theta, config.grid_n_phi);

    ConvergenceReport report;
    report.sweep = config.sweep;
    report.kappa = config.kappa;
    report.cap_radius = config.cap_radius;
    report.grid_n_theta = config.grid_n_theta;
    report.grid_n_phi = config.grid_n_phi;
    report.regularize_eps = config.regularize_eps;

    for (std::size_t count : config.counts) {
        StudyRow row;
        row.interior_count = config.sweep == SweepKind::interior ? count : config.fixed_count;
        row.boundary_count = config.sweep == SweepKind::boundary ? count : config.fixed_count;

        PointSet points;
        points.interior = generate_cap_points(cap, row.interior_count);
        points.boundary = generate_boundary_points(cap, row.boundary_count);
        row.h_interior = mesh_norm_interior(points, cap, config.mesh_sample_n_theta,
                                            config.mesh_sample_n_phi);
        row.h_boundary = mesh_norm_boundary(points, cap);

        try {
            CollocationSystem sys = assemble(points, table, problem);
            solve(sys, config.regularize_eps);
            const SurfaceFunction approx = [&sys](const SurfacePoint& p) {
                return evaluate(sys, p);
            };
            row.l2_error = interior_l2_error(grid, cap, problem.exact_solution, approx);
            row.sup_error =
                boundary_sup_error(cap, config.boundary_samples, problem.exact_solution, approx);
            row.ok = true;
        } catch (const NotPositiveDefinite& e) {
            row.ok = false;
            row.message = e.what();
        }
        report.rows.push_back(std::move(row));
    }

    // EOC for the swept family, between consecutive rows that solved.
    for (std::size_t k = 1; k < report.rows.size(); ++k) {
        StudyRow& cur = report.rows[k];
        const StudyRow& prev = report.rows[k - 1];
        if (!cur.ok || !prev.ok) continue;
        if (config.sweep == SweepKind::interior) {
            if (prev.l2_error > 0.0 && cur.l2_error > 0.0 && prev.h_interior != cur.h_interior) {
                cur.eoc_l2 = std::log(prev.l2_error / cur.l2_error) /
                             std::log(prev.h_interior / cur.h_interior);
            }
        } else {
            if (prev.sup_error > 0.0 && cur.sup_error > 0.0 && prev.h_boundary != cur.h_boundary) {
                cur.eoc_sup = std::log(prev.sup_error / cur.sup_error) /
                              std::log(prev.h_boundary / cur.h_boundary);
            }
        }
    }
    return report;
}

namespace {

std::string sci4(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4E", x);
    return buf;
}

std::string eoc2(const std::optional<double>& e) {
    if (!e) return "";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", *e);
    return buf;
}

} // namespace

void write_report_csv(std::ostream& out, const ConvergenceReport& report) {
    out << "M,K,h_X1,h_X2,e_L2,e_sup,EOC_L2,EOC_sup,status\n";
    for (const auto& row : report.rows) {
        out << row.interior_count << ',' << row.boundary_count << ',' << sci4(row.h_interior)
            << ',' << sci4(row.h_boundary) << ',';
        if (row.ok) {
            out << sci4(row.l2_error) << ',' << sci4(row.sup_error);
        } else {
            out << "FAILED,FAILED";
        }
        out << ',' << eoc2(row.eoc_l2) << ',' << eoc2(row.eoc_sup) << ','
            << (row.ok ? "ok" : "failed") << '\n';
    }
}

std::string report_to_json(const ConvergenceReport& report) {
    nlohmann::json j;
    j["metadata"] = {
        {"kernel", report.kernel_name},
        {"sweep", report.sweep == SweepKind::interior ? "interior" : "boundary"},
        {"kappa", report.kappa},
        {"cap_radius", report.cap_radius},
        {"grid_n_theta", report.grid_n_theta},
        {"grid_n_phi", report.grid_n_phi},
        {"regularize_eps", report.regularize_eps},
    };
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json r = {
            {"M", row.interior_count},
            {"K", row.boundary_count},
            {"h_interior", row.h_interior},
            {"h_boundary", row.h_boundary},
            {"status", row.ok ? "ok" : "failed"},
        };
        if (row.ok) {
            r["l2_error"] = row.l2_error;
            r["sup_error"] = row.sup_error;
        } else {
            r["message"] = row.message;
        }
        if (row.eoc_l2) r["eoc_l2"] = *row.eoc_l2;
        if (row.eoc_sup) r["eoc_sup"] = *row.eoc_sup;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

} // namespace caprbf
