#pragma once

#include "gmpb/landscape.hpp"
#include "gmpb/rng.hpp"

#include <vector>

namespace gmpb {

/// Folds value+delta back into [lo,hi], mirroring at whichever bound was
/// crossed, repeated until the result is inside.
double reflect(double value, double delta, double lo, double hi);

/// Moves the center by shift_severity along a uniformly random direction
/// (normalized Gaussian vector), then reflects each coordinate into bounds.
/// A zero severity consumes no draws.
std::vector<double> shift_center(const Component& comp, double shift_severity, Interval bounds,
                                 RandomSource& rng);

/// One environment step for a single component. Draw order is fixed: center
/// direction vector, height, widths ascending, angle, eta ascending, tau;
/// severities that are exactly zero skip their draws. The rotation matrix is
/// then advanced with the new angle unless `rotate` is false or d_i == 1.
Component advance_component(const Component& comp, const SeverityBundle& sev,
                            const ParameterBounds& bounds, RandomSource& rng, bool rotate);

/// Applies advance_component to every component, sub-functions in index
/// order, components in index order, and increments the environment counter.
/// Weights and structure (dimensions, variable indices) never change.
ProblemInstance advance_environment(const ProblemInstance& prob, RandomSource& rng);

} // namespace gmpb
