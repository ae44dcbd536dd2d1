//
// caprbf command-line front end.
//
// Subcommands:
//   solve        assemble and solve one system, report residuals/errors
//   convergence  run an interior or boundary sweep, emit the table
//   kernel-check verify the operator images and the spectral decay
//   dump-grid    per-node exact/approximate/error values for plotting
//
#include "caprbf/collocation.hpp"
#include "caprbf/convergence.hpp"
#include "caprbf/diagnostics.hpp"
#include "caprbf/franke.hpp"
#include "caprbf/geometry.hpp"
#include "caprbf/kernel.hpp"
#include "caprbf/pointsets.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

struct RunConfig {
    std::string command;
    double cap_radius = M_PI / 3.0;
    double kappa = 1.0;
    std::size_t interior = 1000;
    std::size_t boundary = 200;
    std::string sweep = "500,1000,2000,4000";
    std::string sweep_kind = "interior";
    std::string grid = "67,200";
    std::string mesh_sample = "400,1200";
    double regularize_eps = 0.0;
    std::string out;
    std::string format = "csv";
};

std::vector<std::size_t> parse_count_list(const std::string& text, const char* what) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const long long v = std::stoll(item);
        if (v <= 0) {
            throw CLI::ValidationError(std::string(what) + ": counts must be positive");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty()) {
        throw CLI::ValidationError(std::string(what) + ": empty list");
    }
    return out;
}

json config_json(const RunConfig& cfg) {
    return json{
        {"command", cfg.command},
        {"cap-radius", cfg.cap_radius},
        {"kappa", cfg.kappa},
        {"interior", cfg.interior},
        {"boundary", cfg.boundary},
        {"sweep", cfg.sweep},
        {"sweep-kind", cfg.sweep_kind},
        {"grid", cfg.grid},
        {"mesh-sample", cfg.mesh_sample},
        {"regularize-eps", cfg.regularize_eps},
        {"out", cfg.out},
        {"format", cfg.format},
    };
}

// Write via a temp file and rename, so readers never see partial output.
void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::ios_base::failure("cannot open " + tmp + " for writing");
        f << content;
        if (!f.flush()) throw std::ios_base::failure("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw std::ios_base::failure("cannot rename " + tmp + " to " + path);
    }
}

std::string sci4(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4E", x);
    return buf;
}

std::string full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Writes the payload at cfg.out per cfg.format; when the payload is CSV
// the JSON twin (metadata + summary) lands at cfg.out + ".json".
void write_outputs(const RunConfig& cfg, const std::string& csv_payload, json meta) {
    meta["config"] = config_json(cfg);
    if (cfg.format == "json") {
        atomic_write(cfg.out, meta.dump(2) + "\n");
    } else {
        atomic_write(cfg.out, csv_payload);
        atomic_write(cfg.out + ".json", meta.dump(2) + "\n");
    }
}

int run_solve(const RunConfig& cfg) {
    using namespace caprbf;
    const SphericalCap cap(SurfacePoint(0.0, 0.0, 1.0), cfg.cap_radius);
    const OperatorL op{cfg.kappa};
    const DirichletProblem problem = make_franke_problem(cap, op);
    const KernelOperatorTable table = build_table(wendland_psi(), op);

    PointSet points;
    if (cfg.interior > 0) points.interior = generate_cap_points(cap, cfg.interior);
    points.boundary = generate_boundary_points(cap, cfg.boundary);

    CollocationSystem sys = assemble(points, table, problem);
    solve(sys, cfg.regularize_eps);

    const CollocationResiduals res = collocation_residuals(sys, problem);
    const auto grid_counts = parse_count_list(cfg.grid, "--grid");
    const EvaluationGrid grid = generate_eval_grid(cap, grid_counts.at(0), grid_counts.at(1));
    const SurfaceFunction approx = [&sys](const SurfacePoint& p) { return evaluate(sys, p); };
    const double e_l2 = interior_l2_error(grid, cap, problem.exact_solution, approx);
    const double e_sup = boundary_sup_error(cap, 3000, problem.exact_solution, approx);

    json meta{
        {"M", points.interior.size()},
        {"K", points.boundary.size()},
        {"residual_interior_max", res.interior_max},
        {"residual_boundary_max", res.boundary_max},
        {"residual_rel", sys.residual_rel},
        {"refinement_steps", sys.refinement_steps},
        {"regularize_eps_applied", sys.regularize_eps},
        {"l2_error", e_l2},
        {"sup_error", e_sup},
        {"alpha", sys.alpha},
    };
    std::string csv = "alpha\n";
    for (double a : sys.alpha) csv += full(a) + "\n";
    write_outputs(cfg, csv, std::move(meta));

    std::cout << "solve: N=" << sys.size() << " residual_rel=" << sci4(sys.residual_rel)
              << " e_L2=" << sci4(e_l2) << " e_sup=" << sci4(e_sup) << "\n";
    return 0;
}

int run_convergence(const RunConfig& cfg) {
    using namespace caprbf;
    StudyConfig study;
    study.sweep = cfg.sweep_kind == "boundary" ? SweepKind::boundary : SweepKind::interior;
    study.counts = parse_count_list(cfg.sweep, "--sweep");
    study.fixed_count = study.sweep == SweepKind::interior ? cfg.boundary : cfg.interior;
    study.cap_radius = cfg.cap_radius;
    study.kappa = cfg.kappa;
    study.regularize_eps = cfg.regularize_eps;
    const auto grid_counts = parse_count_list(cfg.grid, "--grid");
    study.grid_n_theta = grid_counts.at(0);
    study.grid_n_phi = grid_counts.at(1);
    const auto mesh_counts = parse_count_list(cfg.mesh_sample, "--mesh-sample");
    study.mesh_sample_n_theta = mesh_counts.at(0);
    study.mesh_sample_n_phi = mesh_counts.at(1);

    const ConvergenceReport report = run_convergence_study(study);

    std::ostringstream csv;
    write_report_csv(csv, report);
    json meta = json::parse(report_to_json(report));
    write_outputs(cfg, csv.str(), std::move(meta));

    bool any_failed = false;
    for (const auto& row : report.rows) {
        std::cout << "convergence: M=" << row.interior_count << " K=" << row.boundary_count;
        if (row.ok) {
            std::cout << " e_L2=" << sci4(row.l2_error) << " e_sup=" << sci4(row.sup_error);
            if (row.eoc_l2) std::cout << " EOC_L2=" << *row.eoc_l2;
            if (row.eoc_sup) std::cout << " EOC_sup=" << *row.eoc_sup;
        } else {
            std::cout << " FAILED: " << row.message;
            any_failed = true;
        }
        std::cout << "\n";
    }
    return any_failed ? 2 : 0;
}

int run_kernel_check(const RunConfig& cfg) {
    using namespace caprbf;
    const KernelCheckReport report = caprbf::run_kernel_check(100);

    std::string csv = "ell,a_ell\n";
    for (std::size_t l = 0; l < report.legendre_coeffs.size(); ++l) {
        csv += std::to_string(l) + "," + full(report.legendre_coeffs[l]) + "\n";
    }
    json samples = json::array();
    for (const auto& s : report.samples) {
        samples.push_back({{"t", s.t},
                           {"polynomial", s.polynomial},
                           {"finite_difference", s.finite_difference}});
    }
    json meta{
        {"operator_vs_fd_rel", report.operator_vs_fd},
        {"operator2_vs_fd_rel", report.operator2_vs_fd},
        {"closed_form_max_diff", report.closed_form_max_diff},
        {"fitted_slope", report.fitted_slope},
        {"min_coefficient_l_le_100", report.min_coefficient},
        {"operator_samples", std::move(samples)},
        {"a_ell", report.legendre_coeffs},
    };
    write_outputs(cfg, csv, std::move(meta));

    std::cout << "kernel-check: operator_vs_fd=" << sci4(report.operator_vs_fd)
              << " operator2_vs_fd=" << sci4(report.operator2_vs_fd)
              << " closed_form_diff=" << sci4(report.closed_form_max_diff)
              << " slope=" << report.fitted_slope << "\n";
    const bool ok = report.operator_vs_fd <= 1e-6 && report.operator2_vs_fd <= 1e-4 &&
                    report.fitted_slope > -10.0 && report.fitted_slope < -8.0;
    return ok ? 0 : 2;
}

int run_dump_grid(const RunConfig& cfg) {
    using namespace caprbf;
    const SphericalCap cap(SurfacePoint(0.0, 0.0, 1.0), cfg.cap_radius);
    const OperatorL op{cfg.kappa};
    const DirichletProblem problem = make_franke_problem(cap, op);
    const KernelOperatorTable table = build_table(wendland_psi(), op);

    PointSet points;
    points.interior = generate_cap_points(cap, cfg.interior);
    points.boundary = generate_boundary_points(cap, cfg.boundary);
    CollocationSystem sys = assemble(points, table, problem);
    solve(sys, cfg.regularize_eps);

    const auto grid_counts = parse_count_list(cfg.grid, "--grid");
    const EvaluationGrid grid = generate_eval_grid(cap, grid_counts.at(0), grid_counts.at(1));

    std::string csv = "theta,phi,u,approx,abs_err\n";
    double max_err = 0.0;
    for (const auto& node : grid.nodes) {
        const double u = problem.exact_solution(node.point);
        const double a = evaluate(sys, node.point);
        const double err = std::abs(u - a);
        max_err = std::max(max_err, err);
        csv += full(node.theta) + "," + full(node.phi) + "," + full(u) + "," + full(a) + "," +
               full(err) + "\n";
    }
    json meta{
        {"M", points.interior.size()},
        {"K", points.boundary.size()},
        {"nodes", grid.nodes.size()},
        {"max_abs_err", max_err},
    };
    write_outputs(cfg, csv, std::move(meta));
    std::cout << "dump-grid: nodes=" << grid.nodes.size() << " max_abs_err=" << sci4(max_err)
              << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Collocation solver for kappa^2 u - Lap* u = f on a spherical cap"};
    app.fallthrough();
    app.set_config("--config", "", "Plain key=value config file; flags override it");

    app.add_option("--cap-radius", cfg.cap_radius, "Cap radius in radians, in (0, pi)")
        ->check(CLI::Range(1e-9, M_PI - 1e-9))
        ->capture_default_str();
    app.add_option("--kappa", cfg.kappa, "Operator constant kappa >= 0")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--interior", cfg.interior, "Interior point count M")->capture_default_str();
    app.add_option("--boundary", cfg.boundary, "Boundary point count K")->capture_default_str();
    app.add_option("--sweep", cfg.sweep, "Comma-separated sweep counts")->capture_default_str();
    app.add_option("--sweep-kind", cfg.sweep_kind, "Which family the sweep varies")
        ->check(CLI::IsMember({"interior", "boundary"}))
        ->capture_default_str();
    app.add_option("--grid", cfg.grid, "Evaluation grid as n_theta,n_phi")->capture_default_str();
    app.add_option("--mesh-sample", cfg.mesh_sample, "Mesh-norm sampling as n_theta,n_phi")
        ->capture_default_str();
    app.add_option("--regularize-eps", cfg.regularize_eps,
                   "Optional diagonal jitter (0 disables)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--out", cfg.out, "Output path (default <command>.<format>)");
    app.add_option("--format", cfg.format, "Payload format at --out")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    app.require_subcommand(1);
    CLI::App* cmd_solve = app.add_subcommand("solve", "Solve one collocation system");
    CLI::App* cmd_conv = app.add_subcommand("convergence", "Run a convergence sweep");
    CLI::App* cmd_kernel = app.add_subcommand("kernel-check", "Operator and spectrum self-checks");
    CLI::App* cmd_dump = app.add_subcommand("dump-grid", "Dump per-node grid values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (cmd_solve->parsed()) cfg.command = "solve";
    if (cmd_conv->parsed()) cfg.command = "convergence";
    if (cmd_kernel->parsed()) cfg.command = "kernel-check";
    if (cmd_dump->parsed()) cfg.command = "dump-grid";
    if (cfg.out.empty()) {
        cfg.out = cfg.command + (cfg.format == "json" ? ".json" : ".csv");
    }

    try {
        if (cfg.command == "solve") return run_solve(cfg);
        if (cfg.command == "convergence") return run_convergence(cfg);
        if (cfg.command == "kernel-check") return run_kernel_check(cfg);
        return run_dump_grid(cfg);
    } catch (const caprbf::NotPositiveDefinite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
