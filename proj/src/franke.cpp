#include "caprbf/franke.hpp"

#include <cmath>

namespace caprbf {

double surface_laplacian(const AmbientFunction& f, const SurfacePoint& p) {
    const auto g = f.gradient(p.x, p.y, p.z);
    const auto h = f.hessian(p.x, p.y, p.z);
    const double lap = h[0] + h[1] + h[2];
    const double xhx = p.x * p.x * h[0] + p.y * p.y * h[1] + p.z * p.z * h[2] +
                       2.0 * (p.x * p.y * h[3] + p.x * p.z * h[4] + p.y * p.z * h[5]);
    const double xg = p.x * g[0] + p.y * g[1] + p.z * g[2];
    return lap - xhx - 2.0 * xg;
}

namespace {

// One Gaussian term c * exp(w(x, y)) with quadratic-or-linear exponent;
// wxy = 0 for all four Franke terms.
struct FrankeTerm {
    double value;
    double wx, wy;
    double wxx, wyy;
};

// Evaluates the four terms and their exponent derivatives at (x, y).
std::array<FrankeTerm, 4> franke_terms(double x, double y) {
    std::array<FrankeTerm, 4> t{};

    const double e1 = 0.75 * std::exp(-((9.0 * x - 2.0) * (9.0 * x - 2.0) +
                                        (9.0 * y - 2.0) * (9.0 * y - 2.0)) / 4.0);
    t[0] = FrankeTerm{e1, -4.5 * (9.0 * x - 2.0), -4.5 * (9.0 * y - 2.0), -40.5, -40.5};

    const double e2 = 0.75 * std::exp(-(9.0 * x + 1.0) * (9.0 * x + 1.0) / 49.0 -
                                      (9.0 * y + 1.0) / 10.0);
    t[1] = FrankeTerm{e2, -18.0 * (9.0 * x + 1.0) / 49.0, -0.9, -162.0 / 49.0, 0.0};

    const double e3 = 0.5 * std::exp(-((9.0 * x - 7.0) * (9.0 * x - 7.0) +
                                       (9.0 * y - 3.0) * (9.0 * y - 3.0)) / 4.0);
    t[2] = FrankeTerm{e3, -4.5 * (9.0 * x - 7.0), -4.5 * (9.0 * y - 3.0), -40.5, -40.5};

    const double e4 = -0.2 * std::exp(-(9.0 * x - 4.0) * (9.0 * x - 4.0) -
                                      (9.0 * y - 7.0) * (9.0 * y - 7.0));
    t[3] = FrankeTerm{e4, -18.0 * (9.0 * x - 4.0), -18.0 * (9.0 * y - 7.0), -162.0, -162.0};

    return t;
}

AmbientFunction franke_ambient() {
    AmbientFunction f;
    f.value = [](double x, double y, double) {
        double v = 0.0;
        for (const auto& t : franke_terms(x, y)) v += t.value;
        return v;
    };
    f.gradient = [](double x, double y, double) {
        std::array<double, 3> g{0.0, 0.0, 0.0};
        for (const auto& t : franke_terms(x, y)) {
            g[0] += t.wx * t.value;
            g[1] += t.wy * t.value;
        }
        return g;
    };
    f.hessian = [](double x, double y, double) {
        // d^2/dx^2 (e^w) = (wxx + wx^2) e^w, and with wxy = 0 the mixed
        // derivative is wx*wy*e^w.
        std::array<double, 6> h{0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
        for (const auto& t : franke_terms(x, y)) {
            h[0] += (t.wxx + t.wx * t.wx) * t.value;
            h[1] += (t.wyy + t.wy * t.wy) * t.value;
            h[3] += t.wx * t.wy * t.value;
        }
        return h;
    };
    return f;
}

} // namespace

double franke_u(const SurfacePoint& p) {
    double v = 0.0;
    for (const auto& t : franke_terms(p.x, p.y)) v += t.value;
    return v;
}

double franke_surface_laplacian(const SurfacePoint& p) {
    static const AmbientFunction f = franke_ambient();
    return surface_laplacian(f, p);
}

DirichletProblem make_franke_problem(const SphericalCap& cap, const OperatorL& op) {
    const double k2 = op.kappa * op.kappa;
    DirichletProblem problem{
        [k2](const SurfacePoint& p) { return k2 * franke_u(p) - franke_surface_laplacian(p); },
        [](const SurfacePoint& p) { return franke_u(p); },
        [](const SurfacePoint& p) { return franke_u(p); },
        cap,
        op,
    };
    return problem;
}

} // namespace caprbf
