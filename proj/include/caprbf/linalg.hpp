//
// caprbf/linalg.hpp
// Dense symmetric matrices and positive definite factorization.
//
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace caprbf {

// Square dense matrix, row-major.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    std::size_t size() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }

private:
    std::size_t n_{0};
    std::vector<double> a_;
};

// y = A x.
std::vector<double> multiply(const DenseMatrix& a, const std::vector<double>& x);

// Thrown when a Cholesky factorization hits a non-positive pivot. The
// pivot index (0-based) localizes the offending leading minor.
class NotPositiveDefinite : public std::runtime_error {
public:
    NotPositiveDefinite(std::size_t pivot_index, const std::string& detail)
        : std::runtime_error("matrix is not positive definite (pivot " +
                             std::to_string(pivot_index) + "): " + detail),
          pivot(pivot_index) {}

    std::size_t pivot;
};

// Cholesky factorization of a symmetric positive definite matrix; the
// input copy is factored in place on construction. Throws
// NotPositiveDefinite on failure.
class SpdFactorization {
public:
    explicit SpdFactorization(DenseMatrix a);

    // Solves A x = b from the stored factor.
    std::vector<double> solve(const std::vector<double>& rhs) const;

    std::size_t size() const { return factor_.size(); }

private:
    DenseMatrix factor_;
};

} // namespace caprbf
