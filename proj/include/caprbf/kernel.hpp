//
// caprbf/kernel.hpp
// Compactly supported radial kernel profiles in the chord variable, the
// surface operator kappa^2 I - Laplace-Beltrami applied to them exactly,
// and the Legendre-coefficient probe of the kernel's spectrum.
//
#pragma once

#include <cstddef>
#include <vector>

namespace caprbf {

// Polynomial radial profile p(r) = sum c_k r^k on [0, 1], identically
// zero for r > 1. Used for the base kernel and for its operator images,
// all of which stay polynomial.
class PiecewisePolynomialRadial {
public:
    PiecewisePolynomialRadial() = default;
    explicit PiecewisePolynomialRadial(std::vector<double> coefficients);

    // Horner evaluation; exact 0 beyond the support. Throws on r < 0.
    double operator()(double r) const;

    const std::vector<double>& coefficients() const { return coeffs_; }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    // Max |c_k|, a scale for continuity checks.
    double coefficient_scale() const;

private:
    std::vector<double> coeffs_;
};

// The C^6 Wendland profile (1-r)^8_+ (1 + 8r + 25r^2 + 32r^3), expanded
// to its degree-11 coefficient vector by polynomial multiplication.
PiecewisePolynomialRadial wendland_psi();

// Image of the Legendre operator d/dt (1-t^2) d/dt under the change of
// variable t = 1 - r^2/2 (r the chord). On monomials:
//
//     r^k  |->  k^2 r^{k-2} - k(k+2)/4 r^k,
//
// which keeps polynomials polynomial provided there is no r^1 term (an
// r^1 term would leave a 1/r singularity behind). Exact coefficient
// arithmetic; throws std::invalid_argument if coefficients[1] != 0.
PiecewisePolynomialRadial apply_legendre_operator(const PiecewisePolynomialRadial& p);

// L = kappa^2 I - Laplace-Beltrami.
struct OperatorL {
    double kappa{1.0};
};

// Profiles needed by the collocation Gram matrix: psi, L applied to one
// argument of the zonal kernel, and L applied to both. For zonal kernels
// the image is the same whichever argument the operator acts on.
struct KernelOperatorTable {
    PiecewisePolynomialRadial psi;
    PiecewisePolynomialRadial L_psi;    // kappa^2 psi - Lop(psi)
    PiecewisePolynomialRadial LL_psi;   // kappa^4 psi - 2 kappa^2 Lop(psi) + Lop(Lop(psi))
    double sobolev_order{4.5};
    double kappa{1.0};
};

KernelOperatorTable build_table(const PiecewisePolynomialRadial& psi, const OperatorL& op);

// Standard Legendre polynomial P_l(t), normalized by P_l(1) = 1,
// three-term recurrence.
double legendre_polynomial(std::size_t ell, double t);

// Coefficients a_l = 2*pi * Int_{-1}^{1} Phi(t) P_l(t) dt of the zonal
// expansion of Phi(t) = psi(sqrt(2-2t)), by Gauss-Legendre quadrature
// with at least 4*ell_max nodes and long-double accumulation. A doubled
// quadrature must agree to 1e-10 relative to the largest coefficient;
// otherwise throws std::runtime_error. ell_max <= 200.
std::vector<double> legendre_coefficients(const PiecewisePolynomialRadial& psi,
                                          std::size_t ell_max);

// Least-squares slope of log(values[l]) against log(l) for l in
// [ell_lo, ell_hi].
double log_log_slope(const std::vector<double>& values, std::size_t ell_lo, std::size_t ell_hi);

} // namespace caprbf
