#include "gmpb/scenario.hpp"

#include "gmpb/rotation.hpp"

#include <json.hpp>

#include <array>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gmpb {

namespace {

using json = nlohmann::ordered_json;

const std::array<ScenarioStructure, 15> kScenarios = {{
    {50, {2, 3, 5, 6, 7, 8, 10}, 10},
    {50, {2, 3, 5, 5}, 35},
    {50, {2, 2, 3, 5, 5, 5, 5, 5, 8, 10}, 0},
    {50, {}, 50},
    {50, {50}, 0},
    {100, {2, 2, 3, 5, 5, 6, 6, 8, 8, 10, 10, 15}, 20},
    {100, {2, 2, 3, 3, 5, 5, 10}, 70},
    {100, {2, 2, 2, 2, 3, 3, 5, 5, 5, 5, 5, 5, 8, 8, 10, 10, 20}, 0},
    {100, {}, 100},
    {100, {100}, 0},
    {200, {2, 2, 3, 5, 5, 6, 6, 8, 8, 10, 10, 15, 20, 20, 30}, 50},
    {200, {2, 3, 5, 10, 20, 30}, 130},
    {200, {2, 2, 2, 3, 5, 5, 5, 5, 5, 8, 8, 10, 10, 10, 20, 20, 30, 50}, 0},
    {200, {}, 200},
    {200, {200}, 0},
}};

} // namespace

std::string to_string(Mode mode) {
    return mode == Mode::kChallenging ? "challenging" : "default";
}

Mode parse_mode(const std::string& text) {
    if (text == "default")
        return Mode::kDefault;
    if (text == "challenging")
        return Mode::kChallenging;
    throw std::invalid_argument("unknown mode '" + text + "' (expected default|challenging)");
}

const ScenarioStructure& scenario_structure(int id) {
    if (id < 1 || id > 15)
        throw std::invalid_argument("scenario id must be in 1..15, got " + std::to_string(id));
    return kScenarios[static_cast<std::size_t>(id - 1)];
}

ScenarioConfig scenario_config(int id, Mode mode, std::uint64_t seed) {
    const ScenarioStructure& st = scenario_structure(id);
    ScenarioConfig cfg;
    cfg.scenario_id = id;
    cfg.mode = mode;
    cfg.seed = seed;
    cfg.dimension = st.dimension;
    cfg.groups = st.groups;
    const int group_sum = std::accumulate(st.groups.begin(), st.groups.end(), 0);
    cfg.separable_count = st.dimension - group_sum;
    if (cfg.separable_count != st.separable_listed)
        cfg.notes.push_back("separable count adjusted from " +
                            std::to_string(st.separable_listed) + " to " +
                            std::to_string(cfg.separable_count) +
                            " so group sizes and dimension agree");
    cfg.change_period = (mode == Mode::kChallenging ? 200LL : 500LL) * st.dimension;
    cfg.environments = 30;
    cfg.rotation_enabled = true;
    if (mode == Mode::kChallenging) {
        cfg.sampling.shift_severity = {3.0, 5.0};
        cfg.sampling.component_count = {15.0, 35.0};
    }
    return cfg;
}

SubFunction sample_subfunction(RandomSource& rng, int dimension, const SamplingRanges& sampling,
                               const ParameterBounds& bounds, bool rotation_enabled) {
    if (dimension < 1)
        throw std::invalid_argument("sample_subfunction: dimension must be >= 1");
    SubFunction sf;
    sf.dimension = dimension;
    const int m = static_cast<int>(rng.next_int(std::llround(sampling.component_count.lo),
                                                std::llround(sampling.component_count.hi)));
    sf.severities.shift = rng.next_uniform(sampling.shift_severity.lo, sampling.shift_severity.hi);
    sf.severities.angle = rng.next_uniform(sampling.angle_severity.lo, sampling.angle_severity.hi);
    sf.severities.height = rng.next_uniform(sampling.height_severity.lo, sampling.height_severity.hi);
    sf.severities.width = rng.next_uniform(sampling.width_severity.lo, sampling.width_severity.hi);
    sf.severities.tau = rng.next_uniform(sampling.tau_severity.lo, sampling.tau_severity.hi);
    sf.severities.eta = rng.next_uniform(sampling.eta_severity.lo, sampling.eta_severity.hi);
    sf.weight = rng.next_uniform(sampling.weight.lo, sampling.weight.hi);
    sf.components.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        Component comp;
        comp.center.resize(dimension);
        for (double& c : comp.center)
            c = rng.next_uniform(bounds.search.lo, bounds.search.hi);
        comp.height = rng.next_uniform(bounds.height.lo, bounds.height.hi);
        comp.widths.resize(dimension);
        for (double& w : comp.widths)
            w = rng.next_uniform(bounds.width.lo, bounds.width.hi);
        comp.angle = rng.next_uniform(bounds.angle.lo, bounds.angle.hi);
        comp.tau = rng.next_uniform(bounds.tau.lo, bounds.tau.hi);
        for (double& e : comp.eta)
            e = rng.next_uniform(bounds.eta.lo, bounds.eta.hi);
        comp.rotation = (rotation_enabled && dimension > 1) ? random_orthogonal(rng, dimension)
                                                            : Matrix::identity(dimension);
        sf.components.push_back(std::move(comp));
    }
    return sf;
}

ProblemInstance build_instance(const ScenarioConfig& cfg, RandomSource& rng) {
    validate_config(cfg);
    ProblemInstance prob;
    prob.dimension = cfg.dimension;
    prob.bounds = cfg.bounds;
    prob.rotation_enabled = cfg.rotation_enabled;

    const auto perm = rng.next_permutation(static_cast<std::size_t>(cfg.dimension));
    std::vector<int> sizes = cfg.groups;
    sizes.insert(sizes.end(), static_cast<std::size_t>(cfg.separable_count), 1);

    std::size_t cursor = 0;
    prob.sub_functions.reserve(sizes.size());
    for (const int sz : sizes) {
        SubFunction sf =
            sample_subfunction(rng, sz, cfg.sampling, cfg.bounds, cfg.rotation_enabled);
        sf.variable_indices.resize(static_cast<std::size_t>(sz));
        for (int j = 0; j < sz; ++j)
            sf.variable_indices[static_cast<std::size_t>(j)] = static_cast<int>(perm[cursor + j]);
        cursor += static_cast<std::size_t>(sz);
        prob.sub_functions.push_back(std::move(sf));
    }
    return prob;
}

std::pair<ProblemInstance, ScenarioConfig> build_scenario(int id, Mode mode, std::uint64_t seed) {
    ScenarioConfig cfg = scenario_config(id, mode, seed);
    RandomSource rng(seed);
    return {build_instance(cfg, rng), std::move(cfg)};
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok)
        throw std::invalid_argument("invalid config: " + what);
}

void check_interval(const Interval& iv, const std::string& name, bool nonnegative = false) {
    require(std::isfinite(iv.lo) && std::isfinite(iv.hi), name + " must be finite");
    require(iv.lo <= iv.hi, name + " must satisfy lo <= hi");
    if (nonnegative)
        require(iv.lo >= 0.0, name + " must be nonnegative");
}

} // namespace

void validate_config(const ScenarioConfig& cfg) {
    require(cfg.scenario_id >= 0 && cfg.scenario_id <= 15, "scenario_id out of range");
    require(cfg.dimension >= 1, "dimension must be >= 1");
    require(cfg.separable_count >= 0, "separable_count must be >= 0");
    long long total = cfg.separable_count;
    for (const int g : cfg.groups) {
        require(g >= 1, "group sizes must be >= 1");
        total += g;
    }
    require(total == cfg.dimension, "group sizes plus separable_count must equal dimension");
    require(cfg.change_period >= 1, "change_period must be >= 1");
    require(cfg.environments >= 1, "environments must be >= 1");
    check_interval(cfg.sampling.shift_severity, "shift severity", true);
    check_interval(cfg.sampling.component_count, "component count");
    require(cfg.sampling.component_count.lo >= 1.0, "component count must be >= 1");
    check_interval(cfg.sampling.angle_severity, "angle severity", true);
    check_interval(cfg.sampling.height_severity, "height severity", true);
    check_interval(cfg.sampling.width_severity, "width severity", true);
    check_interval(cfg.sampling.tau_severity, "tau severity", true);
    check_interval(cfg.sampling.eta_severity, "eta severity", true);
    check_interval(cfg.sampling.weight, "weight");
    require(cfg.sampling.weight.lo > 0.0, "weight must be positive");
    check_interval(cfg.bounds.search, "search range");
    require(cfg.bounds.search.lo < cfg.bounds.search.hi, "search range must be nonempty");
    check_interval(cfg.bounds.height, "height range");
    check_interval(cfg.bounds.width, "width range");
    require(cfg.bounds.width.lo > 0.0, "width range must be strictly positive");
    check_interval(cfg.bounds.angle, "angle range");
    check_interval(cfg.bounds.tau, "tau range");
    check_interval(cfg.bounds.eta, "eta range");
}

namespace {

json interval_to_json(const Interval& iv) { return json::array({iv.lo, iv.hi}); }

Interval interval_from_json(const json& j, const std::string& name) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::runtime_error("config parse error: field '" + name +
                                 "' must be a [lo, hi] number pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

void reject_unknown(const json& obj, const std::vector<std::string>& allowed,
                    const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const std::string& name : allowed)
            if (key == name) {
                known = true;
                break;
            }
        if (!known)
            throw std::runtime_error("config parse error: unknown field '" + key + "' in " + where);
    }
}

const json& field(const json& obj, const std::string& name) {
    auto it = obj.find(name);
    if (it == obj.end())
        throw std::runtime_error("config parse error: missing field '" + name + "'");
    return *it;
}

} // namespace

void save_config(const ScenarioConfig& cfg, std::ostream& os) {
    json j;
    j["scenario_id"] = scenario_name(cfg);
    j["mode"] = to_string(cfg.mode);
    j["seed"] = cfg.seed;
    j["dimension"] = cfg.dimension;
    j["groups"] = cfg.groups;
    j["separable_count"] = cfg.separable_count;
    j["change_period"] = cfg.change_period;
    j["environments"] = cfg.environments;
    j["rotation_enabled"] = cfg.rotation_enabled;
    j["ranges"] = {
        {"search", interval_to_json(cfg.bounds.search)},
        {"height", interval_to_json(cfg.bounds.height)},
        {"width", interval_to_json(cfg.bounds.width)},
        {"angle", interval_to_json(cfg.bounds.angle)},
        {"tau", interval_to_json(cfg.bounds.tau)},
        {"eta", interval_to_json(cfg.bounds.eta)},
    };
    j["severities"] = {
        {"shift", interval_to_json(cfg.sampling.shift_severity)},
        {"angle", interval_to_json(cfg.sampling.angle_severity)},
        {"height", interval_to_json(cfg.sampling.height_severity)},
        {"width", interval_to_json(cfg.sampling.width_severity)},
        {"tau", interval_to_json(cfg.sampling.tau_severity)},
        {"eta", interval_to_json(cfg.sampling.eta_severity)},
    };
    j["sampling"] = {
        {"components", interval_to_json(cfg.sampling.component_count)},
        {"weight", interval_to_json(cfg.sampling.weight)},
    };
    if (!cfg.notes.empty())
        j["notes"] = cfg.notes;
    os << j.dump(2) << '\n';
}

void save_config(const ScenarioConfig& cfg, const std::string& path) {
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    save_config(cfg, os);
}

ScenarioConfig load_config(std::istream& is) {
    json j;
    try {
        j = json::parse(is);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object())
        throw std::runtime_error("config parse error: top level must be an object");
    reject_unknown(j,
                   {"scenario_id", "mode", "seed", "dimension", "groups", "separable_count",
                    "change_period", "environments", "rotation_enabled", "ranges", "severities",
                    "sampling", "notes"},
                   "top level");

    ScenarioConfig cfg;
    const std::string id_name = field(j, "scenario_id").get<std::string>();
    cfg.scenario_id = (id_name == "custom") ? 0 : parse_scenario_id(id_name);
    cfg.mode = parse_mode(field(j, "mode").get<std::string>());
    cfg.seed = field(j, "seed").get<std::uint64_t>();
    cfg.dimension = field(j, "dimension").get<int>();
    cfg.groups = field(j, "groups").get<std::vector<int>>();
    cfg.separable_count = field(j, "separable_count").get<int>();
    cfg.change_period = field(j, "change_period").get<long long>();
    cfg.environments = field(j, "environments").get<int>();
    cfg.rotation_enabled = field(j, "rotation_enabled").get<bool>();

    const json& ranges = field(j, "ranges");
    reject_unknown(ranges, {"search", "height", "width", "angle", "tau", "eta"}, "ranges");
    cfg.bounds.search = interval_from_json(field(ranges, "search"), "ranges.search");
    cfg.bounds.height = interval_from_json(field(ranges, "height"), "ranges.height");
    cfg.bounds.width = interval_from_json(field(ranges, "width"), "ranges.width");
    cfg.bounds.angle = interval_from_json(field(ranges, "angle"), "ranges.angle");
    cfg.bounds.tau = interval_from_json(field(ranges, "tau"), "ranges.tau");
    cfg.bounds.eta = interval_from_json(field(ranges, "eta"), "ranges.eta");

    const json& severities = field(j, "severities");
    reject_unknown(severities, {"shift", "angle", "height", "width", "tau", "eta"}, "severities");
    cfg.sampling.shift_severity = interval_from_json(field(severities, "shift"), "severities.shift");
    cfg.sampling.angle_severity = interval_from_json(field(severities, "angle"), "severities.angle");
    cfg.sampling.height_severity =
        interval_from_json(field(severities, "height"), "severities.height");
    cfg.sampling.width_severity = interval_from_json(field(severities, "width"), "severities.width");
    cfg.sampling.tau_severity = interval_from_json(field(severities, "tau"), "severities.tau");
    cfg.sampling.eta_severity = interval_from_json(field(severities, "eta"), "severities.eta");

    const json& sampling = field(j, "sampling");
    reject_unknown(sampling, {"components", "weight"}, "sampling");
    cfg.sampling.component_count =
        interval_from_json(field(sampling, "components"), "sampling.components");
    cfg.sampling.weight = interval_from_json(field(sampling, "weight"), "sampling.weight");

    if (auto it = j.find("notes"); it != j.end())
        cfg.notes = it->get<std::vector<std::string>>();

    try {
        validate_config(cfg);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("config parse error: ") + e.what());
    }
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is)
        throw std::runtime_error("cannot open '" + path + "' for reading");
    return load_config(is);
}

std::string scenario_name(const ScenarioConfig& cfg) {
    return cfg.scenario_id == 0 ? "custom" : "f" + std::to_string(cfg.scenario_id);
}

int parse_scenario_id(const std::string& name) {
    if (name.size() >= 2 && name[0] == 'f') {
        int id = 0;
        bool digits = true;
        for (std::size_t i = 1; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9') {
                digits = false;
                break;
            }
            id = id * 10 + (name[i] - '0');
        }
        if (digits && id >= 1 && id <= 15)
            return id;
    }
    throw std::invalid_argument("unknown scenario '" + name + "' (expected f1..f15)");
}

} // namespace gmpb
