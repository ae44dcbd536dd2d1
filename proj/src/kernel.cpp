#include "caprbf/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace caprbf {

PiecewisePolynomialRadial::PiecewisePolynomialRadial(std::vector<double> coefficients)
    : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("PiecewisePolynomialRadial: empty coefficient vector");
    }
}

double PiecewisePolynomialRadial::operator()(double r) const {
    if (r < 0.0) {
        throw std::invalid_argument("PiecewisePolynomialRadial: negative radius");
    }
    if (r > 1.0) return 0.0;
    double v = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        v = v * r + *it;
    }
    return v;
}

double PiecewisePolynomialRadial::coefficient_scale() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

PiecewisePolynomialRadial wendland_psi() {
    // (1-r)^8 by repeated multiplication, then times (1 + 8r + 25r^2 + 32r^3).
    std::vector<double> base{1.0};
    for (int pow = 0; pow < 8; ++pow) {
        std::vector<double> next(base.size() + 1, 0.0);
        for (std::size_t k = 0; k < base.size(); ++k) {
            next[k] += base[k];
            next[k + 1] -= base[k];
        }
        base = std::move(next);
    }
    const std::vector<double> tail{1.0, 8.0, 25.0, 32.0};
    std::vector<double> out(base.size() + tail.size() - 1, 0.0);
    for (std::size_t i = 0; i < base.size(); ++i) {
        for (std::size_t j = 0; j < tail.size(); ++j) {
            out[i + j] += base[i] * tail[j];
        }
    }
    return PiecewisePolynomialRadial(std::move(out));
}

PiecewisePolynomialRadial apply_legendre_operator(const PiecewisePolynomialRadial& p) {
    const auto& c = p.coefficients();
    if (c.size() > 1 && c[1] != 0.0) {
        throw std::invalid_argument(
            "apply_legendre_operator: r^1 coefficient must vanish (operator image would be "
            "singular at r = 0)");
    }
    std::vector<double> out(c.size(), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0.0) continue;
        const double kd = static_cast<double>(k);
        if (k >= 2) out[k - 2] += c[k] * kd * kd;
        out[k] -= c[k] * kd * (kd + 2.0) / 4.0;
    }
    return PiecewisePolynomialRadial(std::move(out));
}

KernelOperatorTable build_table(const PiecewisePolynomialRadial& psi, const OperatorL& op) {
    if (op.kappa < 0.0) {
        throw std::invalid_argument("build_table: kappa must be >= 0");
    }
    const double k2 = op.kappa * op.kappa;
    const PiecewisePolynomialRadial lap = apply_legendre_operator(psi);
    const PiecewisePolynomialRadial lap2 = apply_legendre_operator(lap);

    const auto& pc = psi.coefficients();
    const auto& lc = lap.coefficients();
    const auto& llc = lap2.coefficients();
    const std::size_t n = std::max({pc.size(), lc.size(), llc.size()});

    std::vector<double> one(n, 0.0), two(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const double a = k < pc.size() ? pc[k] : 0.0;
        const double b = k < lc.size() ? lc[k] : 0.0;
        const double d = k < llc.size() ? llc[k] : 0.0;
        one[k] = k2 * a - b;
        two[k] = k2 * k2 * a - 2.0 * k2 * b + d;
    }
    KernelOperatorTable table;
    table.psi = psi;
    table.L_psi = PiecewisePolynomialRadial(std::move(one));
    table.LL_psi = PiecewisePolynomialRadial(std::move(two));
    table.kappa = op.kappa;
    return table;
}

double legendre_polynomial(std::size_t ell, double t) {
    if (ell == 0) return 1.0;
    double pm1 = 1.0, p = t;
    for (std::size_t l = 2; l <= ell; ++l) {
        const double ld = static_cast<double>(l);
        const double pn = ((2.0 * ld - 1.0) * t * p - (ld - 1.0) * pm1) / ld;
        pm1 = p;
        p = pn;
    }
    return p;
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const std::size_t m = (n + 1) / 2;
    for (std::size_t i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double pm1 = 1.0, p = x;
            for (std::size_t l = 2; l <= n; ++l) {
                const double ld = static_cast<double>(l);
                const double pn = ((2.0 * ld - 1.0) * x * p - (ld - 1.0) * pm1) / ld;
                pm1 = p;
                p = pn;
            }
            dp = static_cast<double>(n) * (x * p - pm1) / (x * x - 1.0);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

std::vector<double> legendre_coefficients_at(const PiecewisePolynomialRadial& psi,
                                             std::size_t ell_max, std::size_t n_nodes) {
    std::vector<double> nodes, weights;
    gauss_legendre(n_nodes, nodes, weights);

    // Accumulate in long double: coefficients decay through ~9 orders of
    // magnitude and the integrand cancellation would otherwise leave the
    // small ones in quadrature noise.
    std::vector<long double> acc(ell_max + 1, 0.0L);
    for (std::size_t q = 0; q < n_nodes; ++q) {
        const double t = nodes[q];
        const double r = std::sqrt(std::max(0.0, 2.0 - 2.0 * t));
        const long double wphi =
            static_cast<long double>(weights[q]) * static_cast<long double>(psi(r));
        long double pm1 = 1.0L, p = t;
        acc[0] += wphi;
        if (ell_max >= 1) acc[1] += wphi * p;
        for (std::size_t l = 2; l <= ell_max; ++l) {
            const long double ld = static_cast<long double>(l);
            const long double pn = ((2.0L * ld - 1.0L) * t * p - (ld - 1.0L) * pm1) / ld;
            pm1 = p;
            p = pn;
            acc[l] += wphi * p;
        }
    }
    std::vector<double> out(ell_max + 1);
    for (std::size_t l = 0; l <= ell_max; ++l) {
        out[l] = static_cast<double>(2.0L * static_cast<long double>(M_PI) * acc[l]);
    }
    return out;
}

} // namespace

std::vector<double> legendre_coefficients(const PiecewisePolynomialRadial& psi,
                                          std::size_t ell_max) {
    if (ell_max > 200) {
        throw std::invalid_argument("legendre_coefficients: ell_max must be <= 200");
    }
    const std::size_t n = std::max<std::size_t>(4 * ell_max, 64);
    const std::vector<double> a = legendre_coefficients_at(psi, ell_max, n);
    const std::vector<double> a2 = legendre_coefficients_at(psi, ell_max, 2 * n);

    double scale = 0.0, diff = 0.0;
    for (std::size_t l = 0; l <= ell_max; ++l) {
        scale = std::max(scale, std::abs(a2[l]));
        diff = std::max(diff, std::abs(a[l] - a2[l]));
    }
    if (diff > 1e-10 * scale) {
        throw std::runtime_error("legendre_coefficients: quadrature did not converge (doubling "
                                 "check moved by " +
                                 std::to_string(diff) + ")");
    }
    return a2;
}

double log_log_slope(const std::vector<double>& values, std::size_t ell_lo, std::size_t ell_hi) {
    if (ell_lo < 1 || ell_hi <= ell_lo || ell_hi >= values.size()) {
        throw std::invalid_argument("log_log_slope: bad degree range");
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    double n = 0.0;
    for (std::size_t l = ell_lo; l <= ell_hi; ++l) {
        if (!(values[l] > 0.0)) {
            throw std::invalid_argument("log_log_slope: values must be positive on the fit range");
        }
        const double x = std::log(static_cast<double>(l));
        const double y = std::log(values[l]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        n += 1.0;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace caprbf
