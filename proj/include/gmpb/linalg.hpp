#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gmpb {

/// Dense square matrix, row-major. Sized for rotation work (a few hundred
/// dimensions at most), so no sparse or blocked representation.
struct Matrix {
    int n = 0;
    std::vector<double> a; // n*n entries, row-major

    Matrix() = default;
    explicit Matrix(int size)
        : n(size), a(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0.0) {}

    static Matrix identity(int size);

    double& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
    double operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }

    double* row(int r) { return a.data() + static_cast<std::size_t>(r) * n; }
    const double* row(int r) const { return a.data() + static_cast<std::size_t>(r) * n; }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix matmul(const Matrix& lhs, const Matrix& rhs);

/// y = M x
void matvec(const Matrix& m, std::span<const double> x, std::span<double> y);

/// max |(M^T M - I)_rc|, the orthonormality drift measure.
double orthonormality_error(const Matrix& m);

double max_abs_diff(const Matrix& x, const Matrix& y);

/// LU with partial pivoting; used by tests and diagnostics only.
double determinant(Matrix m);

} // namespace gmpb
