//
// caprbf/diagnostics.hpp
// Self-checks for the kernel/operator machinery: finite-difference
// verification of the operator images, a factored closed form of the
// first image, and the spectral decay probe.
//
#pragma once

#include "caprbf/kernel.hpp"

#include <cstddef>
#include <vector>

namespace caprbf {

struct OperatorSample {
    double t;
    double polynomial;          // chord-form polynomial route
    double finite_difference;   // (1-t^2) Phi'' - 2 t Phi' by central differences
};

struct KernelCheckReport {
    // sup-relative deviations over the sampled t range
    double operator_vs_fd;          // first image, 50 points in [-0.99, 0.999]
    double operator2_vs_fd;         // second image, 50 points in [-0.99, 0.99]
    double closed_form_max_diff;    // |closed form - polynomial| over the support
    std::vector<OperatorSample> samples;   // a few rows for reporting
    std::vector<double> legendre_coeffs;   // a_0 .. a_ell_max
    double fitted_slope;                   // log-log slope over [10, 60]
    double min_coefficient;                // min a_l for l <= 100
};

// Factored closed form of the Legendre-operator image of the Wendland
// profile, as a function of t = 1 - r^2/2 (support t >= 1/2):
//
//   44 (1-r)^6 ( 6t^2 - 19t + 12 - r (208t^2 - 52t - 144) / 2 ).
//
// Derived by factoring (1-r)^6 out of the degree-11 operator-image
// polynomial; used as an independent cross-check of the monomial route.
double closed_form_operator_image(double t);

KernelCheckReport run_kernel_check(std::size_t ell_max = 100);

} // namespace caprbf
