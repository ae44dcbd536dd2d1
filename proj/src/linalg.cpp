#include "caprbf/linalg.hpp"

#include <stdexcept>

// LAPACK (Fortran interface). The Gram matrices here are symmetric, so
// the row-major storage reads as the transpose in LAPACK's column-major
// convention and no conversion is needed.
extern "C" {
void dpotrf_(const char* uplo, const int* n, double* a, const int* lda, int* info);
void dpotrs_(const char* uplo, const int* n, const int* nrhs, const double* a, const int* lda,
             double* b, const int* ldb, int* info);
}

namespace caprbf {

std::vector<double> multiply(const DenseMatrix& a, const std::vector<double>& x) {
    const std::size_t n = a.size();
    if (x.size() != n) {
        throw std::invalid_argument("multiply: dimension mismatch");
    }
    std::vector<double> y(n, 0.0);
    const double* row = a.data();
    for (std::size_t i = 0; i < n; ++i, row += n) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

SpdFactorization::SpdFactorization(DenseMatrix a) : factor_(std::move(a)) {
    const int n = static_cast<int>(factor_.size());
    if (n == 0) {
        throw std::invalid_argument("SpdFactorization: empty matrix");
    }
    int info = 0;
    const char uplo = 'L';
    dpotrf_(&uplo, &n, factor_.data(), &n, &info);
    if (info < 0) {
        throw std::invalid_argument("SpdFactorization: bad argument to dpotrf");
    }
    if (info > 0) {
        throw NotPositiveDefinite(static_cast<std::size_t>(info - 1),
                                  "Cholesky pivot is not positive");
    }
}

std::vector<double> SpdFactorization::solve(const std::vector<double>& rhs) const {
    const int n = static_cast<int>(factor_.size());
    if (rhs.size() != factor_.size()) {
        throw std::invalid_argument("SpdFactorization::solve: dimension mismatch");
    }
    std::vector<double> x = rhs;
    const int one = 1;
    int info = 0;
    const char uplo = 'L';
    dpotrs_(&uplo, &n, &one, factor_.data(), &n, x.data(), &n, &info);
    if (info != 0) {
        throw std::runtime_error("SpdFactorization::solve: dpotrs failed");
    }
    return x;
}

} // namespace caprbf
