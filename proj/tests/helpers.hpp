#pragma once

#include "gmpb/landscape.hpp"
#include "gmpb/scenario.hpp"

#include <numeric>
#include <utility>
#include <vector>

namespace testutil {

/// Plain conical peak: identity rotation, no irregularity.
inline gmpb::Component cone(std::vector<double> center, double height, std::vector<double> widths) {
    gmpb::Component c;
    c.rotation = gmpb::Matrix::identity(static_cast<int>(center.size()));
    c.center = std::move(center);
    c.height = height;
    c.widths = std::move(widths);
    return c;
}

inline gmpb::SubFunction subfn(std::vector<gmpb::Component> comps, double weight,
                               std::vector<int> indices) {
    gmpb::SubFunction sf;
    sf.dimension = static_cast<int>(indices.size());
    sf.variable_indices = std::move(indices);
    sf.components = std::move(comps);
    sf.weight = weight;
    return sf;
}

inline gmpb::ProblemInstance compose(int dimension, std::vector<gmpb::SubFunction> subs) {
    gmpb::ProblemInstance prob;
    prob.dimension = dimension;
    prob.sub_functions = std::move(subs);
    return prob;
}

/// Small custom scenario config for fast end-to-end tests.
inline gmpb::ScenarioConfig tiny_config(std::uint64_t seed, long long change_period = 300,
                                        int environments = 5) {
    gmpb::ScenarioConfig cfg;
    cfg.scenario_id = 0;
    cfg.seed = seed;
    cfg.dimension = 6;
    cfg.groups = {2, 3};
    cfg.separable_count = 1;
    cfg.change_period = change_period;
    cfg.environments = environments;
    return cfg;
}

} // namespace testutil
