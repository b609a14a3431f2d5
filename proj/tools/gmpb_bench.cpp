#include "gmpb/batch.hpp"
#include "gmpb/rotation.hpp"
#include "gmpb/scenario.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

// Compares the OpenMP evaluation kernel against the serial reference, and the
// two-row Givens update against the explicit matrix product. Outputs must
// agree (bitwise for the evaluation kernel, 1e-12 for the rotation), so this
// doubles as a consistency check.

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gmpb kernel benchmark: serial reference vs parallel/optimized"};
    std::string scenario = "f5";
    std::uint64_t seed = 1;
    int points = 20000;
    int rotation_dim = 50;
    app.add_option("--scenario", scenario, "Scenario id")->capture_default_str();
    app.add_option("--seed", seed, "Seed")->capture_default_str();
    app.add_option("--points", points, "Evaluation points")->capture_default_str();
    app.add_option("--rotation-dim", rotation_dim, "Dimension for the rotation comparison")
        ->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    using namespace gmpb;

    auto [prob, cfg] = build_scenario(parse_scenario_id(scenario), Mode::kDefault, seed);
    RandomSource rng(seed ^ 0x9e3779b97f4a7c15ULL);

    const auto d = static_cast<std::size_t>(prob.dimension);
    std::vector<double> xs(static_cast<std::size_t>(points) * d);
    for (double& v : xs)
        v = rng.next_uniform(prob.bounds.search.lo, prob.bounds.search.hi);
    std::vector<double> serial(static_cast<std::size_t>(points));
    std::vector<double> parallel(static_cast<std::size_t>(points));

    // warm-up pass so page faults and thread spin-up stay out of the timings
    evaluate_many(prob, xs, parallel);

    auto t0 = std::chrono::steady_clock::now();
    evaluate_many_serial(prob, xs, serial);
    auto t1 = std::chrono::steady_clock::now();
    evaluate_many(prob, xs, parallel);
    auto t2 = std::chrono::steady_clock::now();

    double max_diff = 0.0;
    for (int i = 0; i < points; ++i)
        max_diff = std::max(max_diff, std::fabs(serial[static_cast<std::size_t>(i)] -
                                                parallel[static_cast<std::size_t>(i)]));

    const double ts = seconds(t0, t1);
    const double tp = seconds(t1, t2);
#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::printf("evaluate_many  %s d=%d points=%d\n", scenario.c_str(), prob.dimension, points);
    std::printf("  serial   %.3fs (%.0f evals/s)\n", ts, points / ts);
    std::printf("  parallel %.3fs (%.0f evals/s, %d threads, speedup %.2fx)\n", tp, points / tp,
                threads, ts / tp);
    std::printf("  max |serial - parallel| = %.3g\n", max_diff);

    const auto pairs = plane_pairs(rotation_dim);
    const auto order = rng.next_permutation(pairs.size());
    Matrix r = random_orthogonal(rng, rotation_dim);
    const double theta = rng.next_uniform(-3.14, 3.14);

    Matrix fast = r;
    t0 = std::chrono::steady_clock::now();
    apply_rotation_sequence(fast, theta, order, pairs);
    t1 = std::chrono::steady_clock::now();
    const Matrix ref = apply_rotation_sequence_reference(r, theta, order, pairs);
    t2 = std::chrono::steady_clock::now();

    std::printf("rotation d=%d (%zu planes)\n", rotation_dim, pairs.size());
    std::printf("  two-row   %.4fs\n", seconds(t0, t1));
    std::printf("  reference %.4fs (speedup %.1fx)\n", seconds(t1, t2),
                seconds(t1, t2) / seconds(t0, t1));
    std::printf("  max |two-row - reference| = %.3g\n", max_abs_diff(fast, ref));

    const bool ok = max_diff == 0.0 && max_abs_diff(fast, ref) <= 1e-12;
    std::printf("%s\n", ok ? "kernels agree" : "KERNEL MISMATCH");
    return ok ? 0 : 1;
}
