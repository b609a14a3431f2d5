#include "gmpb/batch.hpp"

#include <cstddef>
#include <stdexcept>

namespace gmpb {

namespace {

std::size_t checked_point_count(const ProblemInstance& prob, std::span<const double> points,
                                std::span<double> out) {
    const auto d = static_cast<std::size_t>(prob.dimension);
    if (d == 0 || points.size() != out.size() * d)
        throw std::invalid_argument("evaluate_many: points must be an n x d block matching out");
    return out.size();
}

} // namespace

void evaluate_many(const ProblemInstance& prob, std::span<const double> points,
                   std::span<double> out) {
    const auto n = static_cast<std::ptrdiff_t>(checked_point_count(prob, points, out));
    const auto d = static_cast<std::size_t>(prob.dimension);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] =
            evaluate_problem(points.subspan(static_cast<std::size_t>(i) * d, d), prob);
}

void evaluate_many_serial(const ProblemInstance& prob, std::span<const double> points,
                          std::span<double> out) {
    const std::size_t n = checked_point_count(prob, points, out);
    const auto d = static_cast<std::size_t>(prob.dimension);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = evaluate_problem(points.subspan(i * d, d), prob);
}

std::vector<GridSample> sample_grid(const ProblemInstance& prob, const GridSpec& spec) {
    const int d = prob.dimension;
    if (d < 2)
        throw std::invalid_argument("sample_grid: need at least two dimensions");
    if (spec.dim_a < 0 || spec.dim_a >= d || spec.dim_b < 0 || spec.dim_b >= d ||
        spec.dim_a == spec.dim_b)
        throw std::invalid_argument("sample_grid: invalid plot dimensions");
    if (spec.resolution < 2)
        throw std::invalid_argument("sample_grid: resolution must be >= 2");
    if (static_cast<int>(spec.base_point.size()) != d)
        throw std::invalid_argument("sample_grid: base point dimension mismatch");

    const int res = spec.resolution;
    const double lo = prob.bounds.search.lo;
    const double step = prob.bounds.search.width() / (res - 1);
    const std::size_t n = static_cast<std::size_t>(res) * static_cast<std::size_t>(res);

    std::vector<double> points(n * static_cast<std::size_t>(d));
    std::vector<double> ticks(static_cast<std::size_t>(res));
    for (int i = 0; i < res; ++i)
        ticks[static_cast<std::size_t>(i)] = lo + step * i;

    for (int ia = 0; ia < res; ++ia) {
        for (int ib = 0; ib < res; ++ib) {
            double* row =
                points.data() + (static_cast<std::size_t>(ia) * res + ib) * static_cast<std::size_t>(d);
            for (int j = 0; j < d; ++j)
                row[j] = spec.base_point[static_cast<std::size_t>(j)];
            row[spec.dim_a] = ticks[static_cast<std::size_t>(ia)];
            row[spec.dim_b] = ticks[static_cast<std::size_t>(ib)];
        }
    }

    std::vector<double> values(n);
    evaluate_many(prob, points, values);

    std::vector<GridSample> out(n);
    for (int ia = 0; ia < res; ++ia)
        for (int ib = 0; ib < res; ++ib) {
            const std::size_t i = static_cast<std::size_t>(ia) * res + ib;
            out[i] = {ticks[static_cast<std::size_t>(ia)], ticks[static_cast<std::size_t>(ib)],
                      values[i]};
        }
    return out;
}

} // namespace gmpb
