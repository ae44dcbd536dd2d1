#include "caprbf/diagnostics.hpp"

#include <algorithm>
#include <cmath>

namespace caprbf {

namespace {

// Long-double Horner on [0, 1] with the compact-support cutoff. The FD
// quotients below divide differences of profile values by 1e-10; plain
// double evaluation noise (~1e-13 absolute in these profiles) would
// swamp the comparison.
long double eval_profile_ld(const std::vector<double>& coeffs, long double r) {
    if (r > 1.0L) return 0.0L;
    long double v = 0.0L;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        v = v * r + static_cast<long double>(*it);
    }
    return v;
}

long double zonal_ld(const std::vector<double>& coeffs, long double t) {
    const long double rr = 2.0L - 2.0L * t;
    return eval_profile_ld(coeffs, rr > 0.0L ? std::sqrt(rr) : 0.0L);
}

// (1-t^2) Phi'' - 2 t Phi' by 3-point central differences.
long double legendre_op_fd(const std::vector<double>& coeffs, long double t, long double h) {
    const long double fp = zonal_ld(coeffs, t + h);
    const long double f0 = zonal_ld(coeffs, t);
    const long double fm = zonal_ld(coeffs, t - h);
    const long double d1 = (fp - fm) / (2.0L * h);
    const long double d2 = (fp - 2.0L * f0 + fm) / (h * h);
    return (1.0L - t * t) * d2 - 2.0L * t * d1;
}

} // namespace

double closed_form_operator_image(double t) {
    const double rr = 2.0 - 2.0 * t;
    if (rr < 0.0) return 0.0;
    const double r = std::sqrt(rr);
    if (r > 1.0) return 0.0;
    const double base = 1.0 - r;
    const double b2 = base * base;
    const double b6 = b2 * b2 * b2;
    return 44.0 * b6 *
           (6.0 * t * t - 19.0 * t + 12.0 - r * (208.0 * t * t - 52.0 * t - 144.0) / 2.0);
}

KernelCheckReport run_kernel_check(std::size_t ell_max) {
    KernelCheckReport report{};
    const PiecewisePolynomialRadial psi = wendland_psi();
    const PiecewisePolynomialRadial lpsi = apply_legendre_operator(psi);
    const PiecewisePolynomialRadial llpsi = apply_legendre_operator(lpsi);

    // First image against the finite-difference oracle, sup-relative.
    {
        const int n = 50;
        double sup = 0.0, worst = 0.0;
        std::vector<double> poly(n), fd(n), ts(n);
        for (int i = 0; i < n; ++i) {
            const double t = -0.99 + (0.999 - (-0.99)) * static_cast<double>(i) / (n - 1);
            const double r = std::sqrt(std::max(0.0, 2.0 - 2.0 * t));
            ts[i] = t;
            poly[i] = lpsi(r);
            fd[i] = static_cast<double>(
                legendre_op_fd(psi.coefficients(), static_cast<long double>(t), 1e-5L));
            sup = std::max(sup, std::abs(poly[i]));
        }
        for (int i = 0; i < n; ++i) {
            worst = std::max(worst, std::abs(poly[i] - fd[i]));
        }
        report.operator_vs_fd = worst / sup;
        for (int i = 0; i < n; i += 7) {
            report.samples.push_back(OperatorSample{ts[i], poly[i], fd[i]});
        }
    }

    // Second image against a 4th-order FD composition applied to the
    // exact first image.
    {
        const int n = 50;
        double sup = 0.0, worst = 0.0;
        for (int i = 0; i < n; ++i) {
            const double t = -0.99 + (0.99 - (-0.99)) * static_cast<double>(i) / (n - 1);
            const double r = std::sqrt(std::max(0.0, 2.0 - 2.0 * t));
            const long double tl = static_cast<long double>(t);
            const long double h = 1e-4L;
            const auto& lc = lpsi.coefficients();
            const long double fp2 = zonal_ld(lc, tl + 2.0L * h), fp1 = zonal_ld(lc, tl + h);
            const long double f0 = zonal_ld(lc, tl);
            const long double fm1 = zonal_ld(lc, tl - h), fm2 = zonal_ld(lc, tl - 2.0L * h);
            const long double d1 = (-fp2 + 8.0L * fp1 - 8.0L * fm1 + fm2) / (12.0L * h);
            const long double d2 =
                (-fp2 + 16.0L * fp1 - 30.0L * f0 + 16.0L * fm1 - fm2) / (12.0L * h * h);
            const double fd = static_cast<double>((1.0L - tl * tl) * d2 - 2.0L * tl * d1);
            const double poly = llpsi(r);
            sup = std::max(sup, std::abs(poly));
            worst = std::max(worst, std::abs(poly - fd));
        }
        report.operator2_vs_fd = worst / sup;
    }

    // Closed form vs polynomial route across the support.
    {
        double worst = 0.0;
        for (int i = 0; i <= 200; ++i) {
            const double t = 0.5 + 0.5 * static_cast<double>(i) / 200.0;
            const double r = std::sqrt(std::max(0.0, 2.0 - 2.0 * t));
            worst = std::max(worst, std::abs(closed_form_operator_image(t) - lpsi(r)));
        }
        report.closed_form_max_diff = worst;
    }

    report.legendre_coeffs = legendre_coefficients(psi, ell_max);
    report.fitted_slope = log_log_slope(report.legendre_coeffs, 10,
                                        std::min<std::size_t>(60, ell_max));
    report.min_coefficient = report.legendre_coeffs[0];
    for (std::size_t l = 0; l <= std::min<std::size_t>(100, ell_max); ++l) {
        report.min_coefficient = std::min(report.min_coefficient, report.legendre_coeffs[l]);
    }
    return report;
}

} // namespace caprbf
