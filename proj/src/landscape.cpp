#include "gmpb/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gmpb {

double irregularity_transform_scalar(double y, double tau, const std::array<double, 4>& eta) {
    if (y > 0.0) {
        const double ly = std::log(y);
        return std::exp(ly + tau * (std::sin(eta[0] * ly) + std::sin(eta[1] * ly)));
    }
    if (y == 0.0)
        return 0.0;
    const double ly = std::log(-y);
    return -std::exp(ly + tau * (std::sin(eta[2] * ly) + std::sin(eta[3] * ly)));
}

std::vector<double> irregularity_transform(std::span<const double> y, double tau,
                                           const std::array<double, 4>& eta) {
    std::vector<double> out(y.size());
    for (std::size_t j = 0; j < y.size(); ++j)
        out[j] = irregularity_transform_scalar(y[j], tau, eta);
    return out;
}

double evaluate_component(std::span<const double> x_sub, const Component& comp) {
    const int d = comp.dimension();
    if (static_cast<int>(x_sub.size()) != d)
        throw std::invalid_argument("evaluate_component: dimension mismatch");
    if (comp.rotation.n != d)
        throw std::invalid_argument("evaluate_component: rotation size mismatch");

    thread_local std::vector<double> diff, rotated;
    diff.resize(d);
    rotated.resize(d);
    for (int j = 0; j < d; ++j)
        diff[j] = x_sub[j] - comp.center[j];
    matvec(comp.rotation, diff, rotated);

    double radicand = 0.0;
    for (int j = 0; j < d; ++j) {
        const double t = irregularity_transform_scalar(rotated[j], comp.tau, comp.eta);
        radicand += comp.widths[j] * t * t;
    }
    return comp.height - std::sqrt(radicand);
}

double evaluate_subfunction(std::span<const double> x_sub, const SubFunction& sf) {
    if (sf.components.empty())
        throw std::invalid_argument("evaluate_subfunction: no components");
    if (static_cast<int>(x_sub.size()) != sf.dimension)
        throw std::invalid_argument("evaluate_subfunction: dimension mismatch");
    double best = -std::numeric_limits<double>::infinity();
    for (const Component& comp : sf.components)
        best = std::max(best, evaluate_component(x_sub, comp));
    return best;
}

double evaluate_problem(std::span<const double> x, const ProblemInstance& prob) {
    if (static_cast<int>(x.size()) != prob.dimension)
        throw std::invalid_argument("evaluate_problem: dimension mismatch");
    thread_local std::vector<double> x_sub;
    double acc = 0.0;
    for (const SubFunction& sf : prob.sub_functions) {
        x_sub.resize(sf.dimension);
        for (int j = 0; j < sf.dimension; ++j)
            x_sub[j] = x[sf.variable_indices[j]];
        acc += sf.weight * sf.dimension * evaluate_subfunction(x_sub, sf);
    }
    return acc / prob.dimension;
}

double subfunction_optimum_value(const SubFunction& sf) {
    if (sf.components.empty())
        throw std::invalid_argument("subfunction_optimum_value: no components");
    double best = -std::numeric_limits<double>::infinity();
    for (const Component& comp : sf.components)
        best = std::max(best, comp.height);
    return best;
}

double problem_optimum_value(const ProblemInstance& prob) {
    double acc = 0.0;
    for (const SubFunction& sf : prob.sub_functions)
        acc += sf.weight * sf.dimension * subfunction_optimum_value(sf);
    return acc / prob.dimension;
}

std::vector<double> optimum_point(const ProblemInstance& prob) {
    std::vector<double> x(prob.dimension, 0.0);
    for (const SubFunction& sf : prob.sub_functions) {
        const Component* tallest = nullptr;
        for (const Component& comp : sf.components)
            if (!tallest || comp.height > tallest->height)
                tallest = &comp;
        if (!tallest)
            throw std::invalid_argument("optimum_point: sub-function without components");
        for (int j = 0; j < sf.dimension; ++j)
            x[sf.variable_indices[j]] = tallest->center[j];
    }
    return x;
}

double condition_number(const Component& comp) {
    if (comp.widths.empty())
        throw std::invalid_argument("condition_number: empty widths");
    const auto [mn, mx] = std::minmax_element(comp.widths.begin(), comp.widths.end());
    return *mx / *mn;
}

PromisingRegionCount promising_region_count(const ProblemInstance& prob) {
    PromisingRegionCount out{1, false};
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    for (const SubFunction& sf : prob.sub_functions) {
        const auto m = static_cast<std::uint64_t>(sf.components.size());
        if (m == 0)
            throw std::invalid_argument("promising_region_count: sub-function without components");
        if (out.value > kMax / m) {
            out.saturated = true;
            out.value = kMax;
            break;
        }
        out.value *= m;
    }
    return out;
}

} // namespace gmpb
