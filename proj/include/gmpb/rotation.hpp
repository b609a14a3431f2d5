#pragma once

#include "gmpb/linalg.hpp"
#include "gmpb/rng.hpp"

#include <optional>
#include <span>
#include <vector>

namespace gmpb {

/// One rotation plane; p < q < d.
struct PlanePair {
    int p = 0;
    int q = 0;

    friend bool operator==(const PlanePair&, const PlanePair&) = default;
};

/// All d(d-1)/2 unique planes in lexicographic order.
std::vector<PlanePair> plane_pairs(int d);

/// Identity except (p,p)=(q,q)=cos(theta), (p,q)=-sin(theta), (q,p)=sin(theta).
Matrix givens_matrix(int d, PlanePair pair, double theta);

/// Column-wise modified Gram-Schmidt. Returns nullopt when a pivot column's
/// norm falls below 1e-12, signalling the caller to resample the input.
std::optional<Matrix> gram_schmidt(const Matrix& m);

/// GS(N(0,1)^{d x d}) with entries drawn in row-major order; retries with
/// fresh draws if a sample is degenerate (at most 8 attempts).
Matrix random_orthogonal(RandomSource& rng, int d);

/// Left-multiplies the Givens factors G_{pairs[order[i]]}(theta) onto r, in
/// the given order. Each factor touches only rows p and q, so this matches
/// the explicit matrix product within 1e-12.
void apply_rotation_sequence(Matrix& r, double theta, std::span<const std::size_t> order,
                             std::span<const PlanePair> pairs);

/// Explicit-product reference for apply_rotation_sequence, kept for tests and
/// the benchmark.
Matrix apply_rotation_sequence_reference(const Matrix& r, double theta,
                                         std::span<const std::size_t> order,
                                         std::span<const PlanePair> pairs);

/// R_new = (product over all planes, in a random order) G(theta) * R_prev,
/// re-orthonormalized when the drift exceeds 1e-10. Consumes exactly one
/// permutation draw of length d(d-1)/2.
Matrix rotate_update(const Matrix& r_prev, double theta, RandomSource& rng);

} // namespace gmpb
