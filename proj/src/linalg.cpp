#include "gmpb/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace gmpb {

Matrix Matrix::identity(int size) {
    Matrix m(size);
    for (int i = 0; i < size; ++i)
        m(i, i) = 1.0;
    return m;
}

Matrix matmul(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.n != rhs.n)
        throw std::invalid_argument("matmul: size mismatch");
    const int n = lhs.n;
    Matrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const double v = lhs(i, k);
            const double* rrow = rhs.row(k);
            double* orow = out.row(i);
            for (int j = 0; j < n; ++j)
                orow[j] += v * rrow[j];
        }
    }
    return out;
}

void matvec(const Matrix& m, std::span<const double> x, std::span<double> y) {
    if (static_cast<int>(x.size()) != m.n || static_cast<int>(y.size()) != m.n)
        throw std::invalid_argument("matvec: size mismatch");
    for (int i = 0; i < m.n; ++i) {
        const double* row = m.row(i);
        double acc = 0.0;
        for (int j = 0; j < m.n; ++j)
            acc += row[j] * x[j];
        y[i] = acc;
    }
}

double orthonormality_error(const Matrix& m) {
    const int n = m.n;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double dot = 0.0;
            for (int r = 0; r < n; ++r)
                dot += m(r, i) * m(r, j);
            const double dev = std::fabs(dot - (i == j ? 1.0 : 0.0));
            if (dev > worst)
                worst = dev;
        }
    }
    return worst;
}

double max_abs_diff(const Matrix& x, const Matrix& y) {
    if (x.n != y.n)
        throw std::invalid_argument("max_abs_diff: size mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        worst = std::max(worst, std::fabs(x.a[i] - y.a[i]));
    return worst;
}

double determinant(Matrix m) {
    const int n = m.n;
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(m(r, col)) > std::fabs(m(pivot, col)))
                pivot = r;
        if (m(pivot, col) == 0.0)
            return 0.0;
        if (pivot != col) {
            for (int c = 0; c < n; ++c)
                std::swap(m(pivot, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (int r = col + 1; r < n; ++r) {
            const double f = m(r, col) / m(col, col);
            for (int c = col; c < n; ++c)
                m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

} // namespace gmpb
