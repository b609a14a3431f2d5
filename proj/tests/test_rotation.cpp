#include <doctest.h>

#include "gmpb/rotation.hpp"

#include <cmath>
#include <numbers>

using namespace gmpb;

TEST_CASE("plane pairs enumerate lexicographically") {
    CHECK(plane_pairs(1).empty());
    CHECK(plane_pairs(2) == std::vector<PlanePair>{{0, 1}});
    const auto p5 = plane_pairs(5);
    CHECK(p5.size() == 10);
    CHECK(p5.front() == PlanePair{0, 1});
    CHECK(p5.back() == PlanePair{3, 4});
    for (std::size_t i = 1; i < p5.size(); ++i) {
        const bool ordered = p5[i - 1].p < p5[i].p ||
                             (p5[i - 1].p == p5[i].p && p5[i - 1].q < p5[i].q);
        CHECK(ordered);
    }
    for (const int d : {2, 5, 50, 200})
        CHECK(plane_pairs(d).size() == static_cast<std::size_t>(d) * (d - 1) / 2);
}

TEST_CASE("givens matrix") {
    CHECK(givens_matrix(4, {1, 3}, 0.0) == Matrix::identity(4));

    const Matrix quarter = givens_matrix(2, {0, 1}, std::numbers::pi / 2);
    CHECK(std::fabs(quarter(0, 0)) <= 1e-12);
    CHECK(quarter(0, 1) == doctest::Approx(-1.0));
    CHECK(quarter(1, 0) == doctest::Approx(1.0));
    CHECK(std::fabs(quarter(1, 1)) <= 1e-12);

    RandomSource rng(41);
    for (int i = 0; i < 50; ++i) {
        const auto pairs = plane_pairs(6);
        const auto pair = pairs[rng.next_below(pairs.size())];
        const Matrix g = givens_matrix(6, pair, rng.next_uniform(-4.0, 4.0));
        CHECK(orthonormality_error(g) <= 1e-12);
    }
}

TEST_CASE("gram-schmidt fixes points and normalizes") {
    const Matrix eye = Matrix::identity(5);
    CHECK(*gram_schmidt(eye) == eye);

    Matrix twice = eye;
    for (double& v : twice.a)
        v *= 2.0;
    CHECK(*gram_schmidt(twice) == eye);
}

TEST_CASE("gram-schmidt orthonormalizes a random gaussian matrix") {
    RandomSource rng(42);
    Matrix m(10);
    for (double& v : m.a)
        v = rng.next_gaussian();
    const auto q = gram_schmidt(m);
    REQUIRE(q.has_value());
    CHECK(orthonormality_error(*q) < 1e-10);
}

TEST_CASE("gram-schmidt signals a redraw on rank-deficient input") {
    Matrix m(3);
    for (int r = 0; r < 3; ++r) {
        m(r, 0) = r + 1.0;
        m(r, 1) = 2.0 * (r + 1.0); // duplicate direction
        m(r, 2) = 1.0;
    }
    CHECK_FALSE(gram_schmidt(m).has_value());
}

TEST_CASE("random orthogonal matrices") {
    RandomSource rng(43);
    const Matrix one = random_orthogonal(rng, 1);
    CHECK((one(0, 0) == 1.0 || one(0, 0) == -1.0));

    RandomSource a(44), b(44);
    CHECK(random_orthogonal(a, 7) == random_orthogonal(b, 7));

    for (int i = 0; i < 20; ++i) {
        const Matrix q = random_orthogonal(rng, 6);
        CHECK(orthonormality_error(q) <= 1e-10);
        CHECK(std::fabs(std::fabs(determinant(q)) - 1.0) <= 1e-9);
    }
}

TEST_CASE("rotate update with zero angle is the identity map") {
    RandomSource rng(45);
    const Matrix r = random_orthogonal(rng, 5);
    RandomSource dyn(46);
    CHECK(rotate_update(r, 0.0, dyn) == r);
}

TEST_CASE("rotate update on a single plane is one givens factor") {
    RandomSource rng(47);
    const Matrix r = random_orthogonal(rng, 2);
    const double theta = 0.83;
    RandomSource dyn(48);
    const Matrix updated = rotate_update(r, theta, dyn);
    const Matrix expected = matmul(givens_matrix(2, {0, 1}, theta), r);
    CHECK(max_abs_diff(updated, expected) <= 1e-12);
}

TEST_CASE("orthonormality survives a thousand updates") {
    RandomSource rng(49);
    Matrix r = random_orthogonal(rng, 3);
    for (int i = 0; i < 1000; ++i)
        r = rotate_update(r, std::numbers::pi / 6, rng);
    CHECK(orthonormality_error(r) <= 1e-9);
}

TEST_CASE("rotate update consumes exactly one permutation draw") {
    RandomSource rng(50);
    const Matrix r = random_orthogonal(rng, 6);
    RandomSource used(51), witness(51);
    (void)rotate_update(r, 0.4, used);
    (void)witness.next_permutation(plane_pairs(6).size());
    CHECK(used == witness);
}

TEST_CASE("two-row update matches the explicit givens product") {
    RandomSource rng(52);
    const int d = 8;
    const Matrix r = random_orthogonal(rng, d);
    const auto pairs = plane_pairs(d);
    const auto order = rng.next_permutation(pairs.size());
    const double theta = rng.next_uniform(-3.0, 3.0);

    Matrix fast = r;
    apply_rotation_sequence(fast, theta, order, pairs);
    const Matrix ref = apply_rotation_sequence_reference(r, theta, order, pairs);
    CHECK(max_abs_diff(fast, ref) <= 1e-12);
}
