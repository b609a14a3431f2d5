#include "gmpb/rotation.hpp"

#include <cmath>
#include <stdexcept>

namespace gmpb {

namespace {
constexpr double kPivotFloor = 1e-12;
constexpr double kDriftThreshold = 1e-10;
} // namespace

std::vector<PlanePair> plane_pairs(int d) {
    if (d < 1)
        throw std::invalid_argument("plane_pairs: dimension must be >= 1");
    std::vector<PlanePair> pairs;
    pairs.reserve(static_cast<std::size_t>(d) * (d - 1) / 2);
    for (int p = 0; p < d; ++p)
        for (int q = p + 1; q < d; ++q)
            pairs.push_back({p, q});
    return pairs;
}

Matrix givens_matrix(int d, PlanePair pair, double theta) {
    if (pair.p < 0 || pair.q <= pair.p || pair.q >= d)
        throw std::invalid_argument("givens_matrix: invalid plane pair");
    Matrix g = Matrix::identity(d);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    g(pair.p, pair.p) = c;
    g(pair.q, pair.q) = c;
    g(pair.p, pair.q) = -s;
    g(pair.q, pair.p) = s;
    return g;
}

std::optional<Matrix> gram_schmidt(const Matrix& m) {
    const int n = m.n;
    Matrix q = m;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            double dot = 0.0;
            for (int r = 0; r < n; ++r)
                dot += q(r, i) * q(r, j);
            for (int r = 0; r < n; ++r)
                q(r, j) -= dot * q(r, i);
        }
        double norm2 = 0.0;
        for (int r = 0; r < n; ++r)
            norm2 += q(r, j) * q(r, j);
        const double norm = std::sqrt(norm2);
        if (norm < kPivotFloor)
            return std::nullopt;
        for (int r = 0; r < n; ++r)
            q(r, j) /= norm;
    }
    return q;
}

Matrix random_orthogonal(RandomSource& rng, int d) {
    if (d < 1)
        throw std::invalid_argument("random_orthogonal: dimension must be >= 1");
    for (int attempt = 0; attempt < 8; ++attempt) {
        Matrix m(d);
        for (double& v : m.a)
            v = rng.next_gaussian();
        if (auto q = gram_schmidt(m))
            return *std::move(q);
    }
    throw std::runtime_error("random_orthogonal: degenerate samples on 8 consecutive attempts");
}

void apply_rotation_sequence(Matrix& r, double theta, std::span<const std::size_t> order,
                             std::span<const PlanePair> pairs) {
    const int n = r.n;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    for (const std::size_t idx : order) {
        const PlanePair pair = pairs[idx];
        double* rp = r.row(pair.p);
        double* rq = r.row(pair.q);
        for (int j = 0; j < n; ++j) {
            const double vp = rp[j];
            const double vq = rq[j];
            rp[j] = c * vp - s * vq;
            rq[j] = s * vp + c * vq;
        }
    }
}

Matrix apply_rotation_sequence_reference(const Matrix& r, double theta,
                                         std::span<const std::size_t> order,
                                         std::span<const PlanePair> pairs) {
    Matrix acc = r;
    for (const std::size_t idx : order)
        acc = matmul(givens_matrix(r.n, pairs[idx], theta), acc);
    return acc;
}

Matrix rotate_update(const Matrix& r_prev, double theta, RandomSource& rng) {
    const auto pairs = plane_pairs(r_prev.n);
    const auto order = rng.next_permutation(pairs.size());
    Matrix r = r_prev;
    apply_rotation_sequence(r, theta, order, pairs);
    if (orthonormality_error(r) > kDriftThreshold) {
        auto q = gram_schmidt(r);
        if (!q)
            throw std::runtime_error("rotate_update: re-orthonormalization failed");
        r = *std::move(q);
    }
    return r;
}

} // namespace gmpb
