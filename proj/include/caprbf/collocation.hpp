//
// caprbf/collocation.hpp
// Symmetric collocation: Gram assembly over interior/boundary point
// sets, positive definite solve, and evaluation of the approximant.
//
#pragma once

#include "caprbf/franke.hpp"
#include "caprbf/geometry.hpp"
#include "caprbf/kernel.hpp"
#include "caprbf/linalg.hpp"

#include <cstddef>
#include <vector>

namespace caprbf {

// Assembled (and optionally solved) collocation system. Interior rows
// come first (indices 0..M-1), boundary rows follow. Blocks:
//
//   interior x interior   LL_psi(chord)
//   interior x boundary   L_psi(chord)
//   boundary x boundary   psi(chord)
//
// with f at interior nodes and g at boundary nodes on the right-hand
// side. Once solved the system is immutable and safe to evaluate from
// any number of threads.
struct CollocationSystem {
    PointSet points;
    KernelOperatorTable table;
    DenseMatrix matrix;
    std::vector<double> rhs;
    std::vector<double> alpha;              // empty until solved
    bool factor_ok{false};
    double regularize_eps{0.0};             // jitter actually applied
    int refinement_steps{0};
    double residual_rel{0.0};               // max |A a - b| / max |b|

    std::size_t interior_count() const { return points.interior.size(); }
    std::size_t size() const { return points.size(); }
    bool solved() const { return factor_ok; }
};

// Throws NotPositiveDefinite when two collocation points coincide (zero
// off-diagonal chord distance makes the Gram singular).
CollocationSystem assemble(const PointSet& points, const KernelOperatorTable& table,
                           const DirichletProblem& problem);

// Cholesky solve with one residual-based refinement step when the
// relative residual exceeds 1e-10. No regularization by default; a
// positive regularize_eps scales the diagonal by (1 + eps) before
// factoring and is recorded on the system. Throws NotPositiveDefinite
// on factorization failure.
void solve(CollocationSystem& sys, double regularize_eps = 0.0);

// The approximant at p.
double evaluate(const CollocationSystem& sys, const SurfacePoint& p);

// L applied to the approximant at p.
double evaluate_L(const CollocationSystem& sys, const SurfacePoint& p);

// alpha^T A alpha: squared native-space norm of the approximant.
double native_norm_squared(const CollocationSystem& sys);

struct CollocationResiduals {
    double interior_max;   // max |L(approx)(x_i) - f(x_i)|
    double boundary_max;   // max |approx(x_j) - g(x_j)|
    double forcing_scale;  // max |f| over interior nodes
    double data_scale;     // max |g| over boundary nodes
};

CollocationResiduals collocation_residuals(const CollocationSystem& sys,
                                           const DirichletProblem& problem);

} // namespace caprbf
