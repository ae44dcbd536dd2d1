#include "caprbf/collocation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace caprbf {

namespace {

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

} // namespace

CollocationSystem assemble(const PointSet& points, const KernelOperatorTable& table,
                           const DirichletProblem& problem) {
    const std::size_t m = points.interior.size();
    const std::size_t n = points.size();
    if (n == 0) {
        throw std::invalid_argument("assemble: empty point set");
    }

    std::vector<const SurfacePoint*> all;
    all.reserve(n);
    for (const auto& p : points.interior) all.push_back(&p);
    for (const auto& p : points.boundary) all.push_back(&p);

    CollocationSystem sys{points, table, DenseMatrix(n), std::vector<double>(n), {},
                          false,  0.0,   0,              0.0};

    // Upper triangle, mirrored, so symmetry is exact.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double r = chord_distance(*all[i], *all[j]);
            if (j > i && r < 1e-12) {
                throw NotPositiveDefinite(
                    j, "coincident collocation points " + std::to_string(i) + " and " +
                           std::to_string(j) + " make the Gram matrix singular");
            }
            double v;
            if (j < m) {
                v = table.LL_psi(r);
            } else if (i < m) {
                v = table.L_psi(r);
            } else {
                v = table.psi(r);
            }
            sys.matrix(i, j) = v;
            sys.matrix(j, i) = v;
        }
    }

    for (std::size_t i = 0; i < m; ++i) sys.rhs[i] = problem.forcing(points.interior[i]);
    for (std::size_t j = m; j < n; ++j) sys.rhs[j] = problem.boundary_data(points.boundary[j - m]);
    return sys;
}

void solve(CollocationSystem& sys, double regularize_eps) {
    if (sys.matrix.size() == 0) {
        throw std::invalid_argument("solve: system not assembled");
    }
    const std::size_t n = sys.size();

    DenseMatrix work = sys.matrix;
    if (regularize_eps > 0.0) {
        for (std::size_t i = 0; i < n; ++i) work(i, i) *= (1.0 + regularize_eps);
        sys.regularize_eps = regularize_eps;
    }

    const SpdFactorization factor(work);
    sys.alpha = factor.solve(sys.rhs);

    // One step of residual-based refinement when the solve is not at
    // machine precision already; the near-exact boundary interpolation
    // this method delivers depends on it at large N.
    const double rhs_scale = std::max(max_abs(sys.rhs), 1e-300);
    std::vector<double> residual = multiply(sys.matrix, sys.alpha);
    for (std::size_t i = 0; i < n; ++i) residual[i] = sys.rhs[i] - residual[i];
    sys.residual_rel = max_abs(residual) / rhs_scale;
    sys.refinement_steps = 0;
    if (sys.residual_rel > 1e-10) {
        const std::vector<double> correction = factor.solve(residual);
        for (std::size_t i = 0; i < n; ++i) sys.alpha[i] += correction[i];
        residual = multiply(sys.matrix, sys.alpha);
        for (std::size_t i = 0; i < n; ++i) residual[i] = sys.rhs[i] - residual[i];
        sys.residual_rel = max_abs(residual) / rhs_scale;
        sys.refinement_steps = 1;
    }
    sys.factor_ok = true;
}

double evaluate(const CollocationSystem& sys, const SurfacePoint& p) {
    if (!sys.solved()) {
        throw std::logic_error("evaluate: system not solved");
    }
    const std::size_t m = sys.interior_count();
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        acc += sys.alpha[j] * sys.table.L_psi(chord_distance(p, sys.points.interior[j]));
    }
    for (std::size_t j = 0; j < sys.points.boundary.size(); ++j) {
        acc += sys.alpha[m + j] * sys.table.psi(chord_distance(p, sys.points.boundary[j]));
    }
    return acc;
}

double evaluate_L(const CollocationSystem& sys, const SurfacePoint& p) {
    if (!sys.solved()) {
        throw std::logic_error("evaluate_L: system not solved");
    }
    const std::size_t m = sys.interior_count();
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        acc += sys.alpha[j] * sys.table.LL_psi(chord_distance(p, sys.points.interior[j]));
    }
    for (std::size_t j = 0; j < sys.points.boundary.size(); ++j) {
        acc += sys.alpha[m + j] * sys.table.L_psi(chord_distance(p, sys.points.boundary[j]));
    }
    return acc;
}

double native_norm_squared(const CollocationSystem& sys) {
    if (!sys.solved()) {
        throw std::logic_error("native_norm_squared: system not solved");
    }
    const std::vector<double> ax = multiply(sys.matrix, sys.alpha);
    double acc = 0.0;
    for (std::size_t i = 0; i < ax.size(); ++i) acc += sys.alpha[i] * ax[i];
    return acc;
}

CollocationResiduals collocation_residuals(const CollocationSystem& sys,
                                           const DirichletProblem& problem) {
    if (!sys.solved()) {
        throw std::logic_error("collocation_residuals: system not solved");
    }
    CollocationResiduals r{0.0, 0.0, 0.0, 0.0};
    for (const auto& p : sys.points.interior) {
        const double f = problem.forcing(p);
        r.forcing_scale = std::max(r.forcing_scale, std::abs(f));
        r.interior_max = std::max(r.interior_max, std::abs(evaluate_L(sys, p) - f));
    }
    for (const auto& p : sys.points.boundary) {
        const double g = problem.boundary_data(p);
        r.data_scale = std::max(r.data_scale, std::abs(g));
        r.boundary_max = std::max(r.boundary_max, std::abs(evaluate(sys, p) - g));
    }
    return r;
}

} // namespace caprbf
