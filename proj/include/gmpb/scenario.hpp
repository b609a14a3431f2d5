#pragma once

#include "gmpb/landscape.hpp"
#include "gmpb/rng.hpp"

#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace gmpb {

enum class Mode { kDefault, kChallenging };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text); // throws std::invalid_argument

/// Sampling intervals for everything drawn once per sub-function at build
/// time. Defaults are the published default settings; challenging mode
/// changes only shift severity and component count (plus the change period,
/// which lives in ScenarioConfig).
struct SamplingRanges {
    Interval shift_severity{1.0, 3.0};
    Interval component_count{5.0, 15.0}; // integer-inclusive draw
    Interval angle_severity{std::numbers::pi / 12.0, std::numbers::pi / 6.0};
    Interval height_severity{5.0, 9.0};
    Interval width_severity{0.5, 1.5};
    Interval tau_severity{0.05, 0.15};
    Interval eta_severity{1.0, 3.0};
    Interval weight{0.5, 3.0};

    friend bool operator==(const SamplingRanges&, const SamplingRanges&) = default;
};

/// Everything needed to rebuild a problem instance deterministically.
struct ScenarioConfig {
    int scenario_id = 0; // 1..15, or 0 for custom
    Mode mode = Mode::kDefault;
    std::uint64_t seed = 0;
    int dimension = 0;
    std::vector<int> groups; // nonseparable group sizes
    int separable_count = 0; // additional one-variable sub-functions
    long long change_period = 0;
    int environments = 30;
    bool rotation_enabled = true;
    SamplingRanges sampling;
    ParameterBounds bounds;
    std::vector<std::string> notes;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Published structure of one scenario: group sizes and the separable-count
/// column as printed (f_1's printed count disagrees with its dimension; the
/// built config records the corrected value).
struct ScenarioStructure {
    int dimension = 0;
    std::vector<int> groups;
    int separable_listed = 0;
};

const ScenarioStructure& scenario_structure(int id); // id in 1..15

ScenarioConfig scenario_config(int id, Mode mode, std::uint64_t seed);

/// Samples one sub-function: component count, severities (shift, angle,
/// height, width, tau, eta), weight, then per-component initial values
/// (center, height, widths, angle, tau, eta, rotation), in that draw order.
/// variable_indices are left empty; build_instance assigns them.
SubFunction sample_subfunction(RandomSource& rng, int dimension, const SamplingRanges& sampling,
                               const ParameterBounds& bounds, bool rotation_enabled);

/// Builds the instance: one global permutation assigns variable indices,
/// then sub-functions are sampled in order (groups as configured, separable
/// variables last).
ProblemInstance build_instance(const ScenarioConfig& cfg, RandomSource& rng);

/// Convenience: scenario_config + a fresh RandomSource(seed) + build_instance.
std::pair<ProblemInstance, ScenarioConfig> build_scenario(int id, Mode mode, std::uint64_t seed);

void validate_config(const ScenarioConfig& cfg); // throws std::invalid_argument

void save_config(const ScenarioConfig& cfg, std::ostream& os);
void save_config(const ScenarioConfig& cfg, const std::string& path);
ScenarioConfig load_config(std::istream& is);   // throws std::runtime_error on bad input
ScenarioConfig load_config(const std::string& path);

std::string scenario_name(const ScenarioConfig& cfg); // "f4" or "custom"
int parse_scenario_id(const std::string& name);       // "f1".."f15"

} // namespace gmpb
