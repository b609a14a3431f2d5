#include <doctest.h>

#include "gmpb/batch.hpp"
#include "gmpb/scenario.hpp"
#include "helpers.hpp"

#include <cstring>
#include <stdexcept>
#include <vector>

using namespace gmpb;
using testutil::compose;
using testutil::cone;
using testutil::subfn;

TEST_CASE("parallel kernel matches the serial reference bit for bit") {
    auto [prob, cfg] = build_scenario(2, Mode::kDefault, 3);
    RandomSource rng(1234);
    const int n = 512;
    std::vector<double> points(static_cast<std::size_t>(n) * prob.dimension);
    for (double& v : points)
        v = rng.next_uniform(-60, 60); // includes out-of-box queries
    std::vector<double> serial(n), parallel(n);
    evaluate_many_serial(prob, points, serial);
    evaluate_many(prob, points, parallel);
    CHECK(std::memcmp(serial.data(), parallel.data(), sizeof(double) * n) == 0);
    for (int i = 0; i < n; ++i) {
        const std::span<const double> row(points.data() + static_cast<std::size_t>(i) * prob.dimension,
                                          static_cast<std::size_t>(prob.dimension));
        CHECK(serial[static_cast<std::size_t>(i)] == evaluate_problem(row, prob));
    }
}

TEST_CASE("grid with resolution two has four corner samples") {
    ProblemInstance prob =
        compose(2, {subfn({cone({0.0}, 50.0, {2.0})}, 1.0, {0}),
                    subfn({cone({0.0}, 60.0, {2.0})}, 1.0, {1})});
    GridSpec spec{0, 1, 2, {0.0, 0.0}};
    const auto grid = sample_grid(prob, spec);
    REQUIRE(grid.size() == 4);
    CHECK(grid[0].a == -50.0);
    CHECK(grid[0].b == -50.0);
    CHECK(grid[3].a == 50.0);
    CHECK(grid[3].b == 50.0);
}

TEST_CASE("grid of a cone peaks at the apex") {
    // center on a grid node so the maximum lands exactly there
    ProblemInstance prob = compose(2, {subfn({cone({10.0, -20.0}, 57.0, {3.0, 3.0})}, 1.0, {0, 1})});
    GridSpec spec{0, 1, 101, {0.0, 0.0}};
    const auto grid = sample_grid(prob, spec);
    const GridSample* best = &grid.front();
    for (const GridSample& s : grid)
        if (s.value > best->value)
            best = &s;
    CHECK(best->a == 10.0);
    CHECK(best->b == -20.0);
    CHECK(best->value == 57.0);
}

TEST_CASE("grid values never beat the optimum") {
    auto [prob, cfg] = build_scenario(1, Mode::kDefault, 8);
    GridSpec spec{0, 1, 33, optimum_point(prob)};
    const double opt = problem_optimum_value(prob);
    for (const GridSample& s : sample_grid(prob, spec))
        CHECK(s.value <= opt + 1e-9);
}

TEST_CASE("grid validation") {
    ProblemInstance prob = compose(2, {subfn({cone({0.0, 0.0}, 50.0, {2.0, 2.0})}, 1.0, {0, 1})});
    CHECK_THROWS_AS(sample_grid(prob, GridSpec{0, 0, 10, {0.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(sample_grid(prob, GridSpec{0, 5, 10, {0.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(sample_grid(prob, GridSpec{0, 1, 1, {0.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(sample_grid(prob, GridSpec{0, 1, 10, {0.0}}), std::invalid_argument);
}
