#pragma once

#include "gmpb/landscape.hpp"

#include <span>
#include <vector>

namespace gmpb {

/// Evaluates the composed function at n points given as an n x d row-major
/// block. The parallel kernel splits rows across OpenMP threads; per-row
/// arithmetic is identical to the serial reference, so the outputs match bit
/// for bit regardless of thread count.
void evaluate_many(const ProblemInstance& prob, std::span<const double> points,
                   std::span<double> out);

/// Serial reference for evaluate_many, kept for testing and benchmarking.
void evaluate_many_serial(const ProblemInstance& prob, std::span<const double> points,
                          std::span<double> out);

struct GridSpec {
    int dim_a = 0;                   // first plotted coordinate
    int dim_b = 1;                   // second plotted coordinate
    int resolution = 2;              // samples per axis, >= 2
    std::vector<double> base_point;  // values for the remaining coordinates
};

struct GridSample {
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
};

/// resolution x resolution samples over the search box in the two plotted
/// dimensions (inclusive endpoints, dim_a outer / dim_b inner), remaining
/// coordinates frozen at base_point.
std::vector<GridSample> sample_grid(const ProblemInstance& prob, const GridSpec& spec);

} // namespace gmpb
