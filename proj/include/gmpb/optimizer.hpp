#pragma once

#include "gmpb/harness.hpp"

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace gmpb {

/// Knobs shared by the swarm optimizers. The defaults are the widely used
/// constricted-PSO constants; the benchmark itself prescribes none.
struct SwarmParams {
    int swarm_count = 5;
    int population = 10; // particles per swarm, >= 2
    double inertia = 0.729;
    double cognitive = 1.49445;
    double social = 1.49445;
    /// Swarms whose attractors come closer than this are deduplicated by
    /// reinitializing the worse one. <= 0 selects
    /// range / (2 * swarm_count^(1/dim)).
    double exclusion_radius = 0.0;
    /// Fraction of each swarm reinitialized after a detected change.
    double reinit_fraction = 0.5;
    /// Sub-swarm sizing for the cooperative variant (applied per group).
    int cc_swarms_per_group = 2;
    int cc_population = 6;
    std::size_t max_iterations = std::numeric_limits<std::size_t>::max();
};

using Grouping = std::vector<std::vector<int>>;

/// The scenario's ground-truth variable groups (one per sub-function).
Grouping oracle_grouping(const ProblemInstance& prob);
/// All variables in a single group.
Grouping single_grouping(int dimension);
/// Every variable alone.
Grouping separable_grouping(int dimension);

/// Throws std::invalid_argument unless the groups partition {0..d-1}.
void validate_grouping(const Grouping& grouping, int dimension);

/// Context-vector splice: a copy of context with candidate written at the
/// group's indices.
std::vector<double> splice(std::span<const double> context, std::span<const int> group,
                           std::span<const double> candidate);

/// Uniform sampling of the search box until the budget is exhausted.
RunResult run_random_search(Session& session, RandomSource& rng);

/// Multi-swarm PSO over the full space. Changes are detected by re-evaluating
/// a sentinel solution once per iteration (one budgeted evaluation) unless
/// the session signals changes; the response is a personal-best refresh plus
/// partial reinitialization.
RunResult run_mpso(Session& session, const SwarmParams& params, RandomSource& rng);

/// Cooperative coevolution: one multi-swarm PSO per variable group, evaluated
/// by splicing group candidates into a shared context vector, with
/// round-robin budget allocation across groups.
RunResult run_cc_mpso(Session& session, const Grouping& grouping, const SwarmParams& params,
                      RandomSource& rng);

} // namespace gmpb
