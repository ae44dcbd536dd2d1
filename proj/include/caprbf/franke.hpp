//
// caprbf/franke.hpp
// The manufactured test problem: Franke's function restricted to the
// sphere as exact solution, forcing kappa^2 u - Lap* u, boundary trace.
//
#pragma once

#include "caprbf/geometry.hpp"
#include "caprbf/kernel.hpp"

#include <array>
#include <functional>

namespace caprbf {

using SurfaceFunction = std::function<double(const SurfacePoint&)>;

struct DirichletProblem {
    SurfaceFunction forcing;         // f on the open cap
    SurfaceFunction boundary_data;   // g on the boundary circle
    SurfaceFunction exact_solution;  // empty when unknown
    SphericalCap cap;
    OperatorL op;
};

// Smooth extension of a surface function to R^3, given by closed-form
// ambient partial derivatives. hessian components are ordered
// xx, yy, zz, xy, xz, yz.
struct AmbientFunction {
    std::function<double(double, double, double)> value;
    std::function<std::array<double, 3>(double, double, double)> gradient;
    std::function<std::array<double, 6>(double, double, double)> hessian;
};

// Laplace-Beltrami via the ambient identity, valid on |x| = 1 for any
// smooth extension F:
//
//   Lap* F = Lap F - x^T (Hess F) x - 2 x . grad F.
//
// Works at the poles, unlike the (theta, phi) coordinate expression.
double surface_laplacian(const AmbientFunction& f, const SurfacePoint& p);

// Four-Gaussian Franke function in the first two Cartesian coordinates.
double franke_u(const SurfacePoint& p);

// Lap* of franke_u from hand-coded closed-form partials of the four terms.
double franke_surface_laplacian(const SurfacePoint& p);

// f = kappa^2 u - Lap* u, g = u on the boundary, exact_u = u.
DirichletProblem make_franke_problem(const SphericalCap& cap, const OperatorL& op);

} // namespace caprbf
