#pragma once

#include "gmpb/linalg.hpp"

#include <array>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace gmpb {

/// Closed interval, used for parameter bounds and sampling ranges.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double v) const { return v >= lo && v <= hi; }
    double width() const { return hi - lo; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Per-sub-function change severities, sampled once at build time and
/// constant over all environments.
struct SeverityBundle {
    double shift = 0.0;
    double height = 0.0;
    double width = 0.0;
    double angle = 0.0;
    double tau = 0.0;
    double eta = 0.0;

    friend bool operator==(const SeverityBundle&, const SeverityBundle&) = default;
};

/// Ranges every component parameter is reflected into after each change.
struct ParameterBounds {
    Interval search{-50.0, 50.0};
    Interval height{30.0, 70.0};
    Interval width{1.0, 12.0};
    Interval angle{-std::numbers::pi, std::numbers::pi};
    Interval tau{-0.5, 0.5};
    Interval eta{-20.0, 20.0};

    friend bool operator==(const ParameterBounds&, const ParameterBounds&) = default;
};

/// One peak: a rotated, irregular cone.
struct Component {
    std::vector<double> center;   // length d_i, search-space units
    double height = 0.0;
    std::vector<double> widths;   // length d_i, strictly positive
    double angle = 0.0;           // radians
    Matrix rotation;              // d_i x d_i, orthonormal
    double tau = 0.0;
    std::array<double, 4> eta{};

    int dimension() const { return static_cast<int>(center.size()); }

    friend bool operator==(const Component&, const Component&) = default;
};

/// A group of components over a subset of the decision variables. The
/// sub-function value is the max over its components.
struct SubFunction {
    int dimension = 0;
    std::vector<int> variable_indices; // d_i distinct indices into the full vector
    std::vector<Component> components;
    double weight = 1.0;
    SeverityBundle severities;

    friend bool operator==(const SubFunction&, const SubFunction&) = default;
};

/// The composed problem: a dimension-weighted sum of sub-functions whose
/// variable indices partition {0..d-1}.
struct ProblemInstance {
    int dimension = 0;
    std::vector<SubFunction> sub_functions;
    ParameterBounds bounds;
    bool rotation_enabled = true;
    int environment_index = 0;

    friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

/// Elementwise log-sine warping that makes a component irregular and
/// multimodal. Total function: zero maps to zero, the sign is preserved, the
/// positive branch uses eta[0]/eta[1] and the negative branch eta[2]/eta[3].
double irregularity_transform_scalar(double y, double tau, const std::array<double, 4>& eta);
std::vector<double> irregularity_transform(std::span<const double> y, double tau,
                                           const std::array<double, 4>& eta);

/// height - sqrt( T(R(x-c))^T W T(R(x-c)) ). The radicand is a sum of
/// width-weighted squares, so the value never exceeds the height.
double evaluate_component(std::span<const double> x_sub, const Component& comp);

/// Max over the component values.
double evaluate_subfunction(std::span<const double> x_sub, const SubFunction& sf);

/// d^-1 * sum_i weight_i * d_i * f_i(x restricted to the sub-function's
/// variables).
double evaluate_problem(std::span<const double> x, const ProblemInstance& prob);

/// Max component height; attained at the tallest component's center.
double subfunction_optimum_value(const SubFunction& sf);

/// d^-1 * sum_i weight_i * d_i * h_i,max — the global optimum fitness.
double problem_optimum_value(const ProblemInstance& prob);

/// Full-dimension point assembling every sub-function's tallest-component
/// center through its variable indices; evaluates exactly to
/// problem_optimum_value.
std::vector<double> optimum_point(const ProblemInstance& prob);

/// Ratio of a component's largest width value to its smallest.
double condition_number(const Component& comp);

struct PromisingRegionCount {
    std::uint64_t value = 0;
    bool saturated = false; // product overflowed 64 bits; value pinned at max
};

/// Product of per-sub-function component counts: the maximum number of
/// regions that can hold the global optimum after a change.
PromisingRegionCount promising_region_count(const ProblemInstance& prob);

} // namespace gmpb
