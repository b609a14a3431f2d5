#include <doctest.h>

#include "expected_structures.hpp"
#include "gmpb/rotation.hpp"
#include "gmpb/scenario.hpp"
#include "helpers.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

using namespace gmpb;

namespace {

const auto& kExpected = testutil::expected_structures();

std::vector<int> dimension_multiset(const ProblemInstance& prob) {
    std::vector<int> dims;
    for (const SubFunction& sf : prob.sub_functions)
        dims.push_back(sf.dimension);
    std::sort(dims.begin(), dims.end());
    return dims;
}

} // namespace

TEST_CASE("all fifteen configs match the published structure") {
    for (const auto& [id, exp] : kExpected) {
        const ScenarioConfig cfg = scenario_config(id, Mode::kDefault, 1);
        CHECK(cfg.dimension == exp.d);
        std::vector<int> got = cfg.groups;
        std::sort(got.begin(), got.end());
        std::vector<int> want = exp.groups;
        std::sort(want.begin(), want.end());
        CHECK(got == want);
        CHECK(cfg.separable_count == exp.separable);
        CHECK(cfg.change_period == 500LL * exp.d);
        CHECK(cfg.environments == 30);
        CHECK(scenario_config(id, Mode::kChallenging, 1).change_period == 200LL * exp.d);
    }
    CHECK_THROWS_AS(scenario_config(0, Mode::kDefault, 1), std::invalid_argument);
    CHECK_THROWS_AS(scenario_config(16, Mode::kDefault, 1), std::invalid_argument);
}

TEST_CASE("f1 records its separable-count correction") {
    const ScenarioConfig cfg = scenario_config(1, Mode::kDefault, 3);
    CHECK(cfg.separable_count == 9);
    REQUIRE(!cfg.notes.empty());
    for (int id = 2; id <= 15; ++id)
        CHECK(scenario_config(id, Mode::kDefault, 3).notes.empty());
}

TEST_CASE("built instances carry the expected group structure") {
    for (const int id : {1, 4, 5, 8}) {
        auto [prob, cfg] = build_scenario(id, Mode::kDefault, 11);
        const auto& exp = kExpected.at(id);
        std::vector<int> want = exp.groups;
        want.insert(want.end(), static_cast<std::size_t>(exp.separable), 1);
        std::sort(want.begin(), want.end());
        CHECK(dimension_multiset(prob) == want);
        int total = 0;
        for (const SubFunction& sf : prob.sub_functions)
            total += sf.dimension;
        CHECK(total == exp.d);
    }
    auto [f4, cfg4] = build_scenario(4, Mode::kDefault, 11);
    CHECK(f4.sub_functions.size() == 50);
    auto [f5, cfg5] = build_scenario(5, Mode::kDefault, 11);
    CHECK(f5.sub_functions.size() == 1);
    CHECK(f5.sub_functions[0].dimension == 50);
    auto [f8, cfg8] = build_scenario(8, Mode::kDefault, 11);
    CHECK(f8.sub_functions.size() == 17);
}

TEST_CASE("variable indices partition the decision vector") {
    for (const int id : {1, 2, 6}) {
        auto [prob, cfg] = build_scenario(id, Mode::kDefault, 21);
        std::vector<int> seen(static_cast<std::size_t>(prob.dimension), 0);
        for (const SubFunction& sf : prob.sub_functions) {
            CHECK(static_cast<int>(sf.variable_indices.size()) == sf.dimension);
            for (const int idx : sf.variable_indices) {
                REQUIRE(idx >= 0);
                REQUIRE(idx < prob.dimension);
                ++seen[static_cast<std::size_t>(idx)];
            }
        }
        for (const int count : seen)
            CHECK(count == 1);
    }
}

TEST_CASE("sampled parameters respect their ranges") {
    for (const auto mode : {Mode::kDefault, Mode::kChallenging}) {
        auto [prob, cfg] = build_scenario(2, mode, 33);
        const bool challenging = mode == Mode::kChallenging;
        for (const SubFunction& sf : prob.sub_functions) {
            CHECK(sf.weight >= 0.5);
            CHECK(sf.weight <= 3.0);
            const int m = static_cast<int>(sf.components.size());
            CHECK(m >= (challenging ? 15 : 5));
            CHECK(m <= (challenging ? 35 : 15));
            CHECK(sf.severities.shift >= (challenging ? 3.0 : 1.0));
            CHECK(sf.severities.shift <= (challenging ? 5.0 : 3.0));
            CHECK(sf.severities.height >= 5.0);
            CHECK(sf.severities.height <= 9.0);
            CHECK(sf.severities.width >= 0.5);
            CHECK(sf.severities.width <= 1.5);
            CHECK(sf.severities.tau >= 0.05);
            CHECK(sf.severities.tau <= 0.15);
            CHECK(sf.severities.eta >= 1.0);
            CHECK(sf.severities.eta <= 3.0);
            for (const Component& c : sf.components) {
                CHECK(cfg.bounds.height.contains(c.height));
                CHECK(cfg.bounds.angle.contains(c.angle));
                CHECK(cfg.bounds.tau.contains(c.tau));
                for (const double e : c.eta)
                    CHECK(cfg.bounds.eta.contains(e));
                for (const double w : c.widths)
                    CHECK(cfg.bounds.width.contains(w));
                for (const double x : c.center)
                    CHECK(cfg.bounds.search.contains(x));
                if (sf.dimension == 1)
                    CHECK(c.rotation == Matrix::identity(1));
                else
                    CHECK(orthonormality_error(c.rotation) <= 1e-9);
            }
        }
    }
}

TEST_CASE("instance construction replays from the seed") {
    auto [a, cfga] = build_scenario(3, Mode::kDefault, 55);
    auto [b, cfgb] = build_scenario(3, Mode::kDefault, 55);
    CHECK(a == b);
    CHECK(cfga == cfgb);
    auto [c, cfgc] = build_scenario(3, Mode::kDefault, 56);
    CHECK(a != c);
}

TEST_CASE("config round-trips through json") {
    for (const int id : {1, 7}) {
        for (const auto mode : {Mode::kDefault, Mode::kChallenging}) {
            const ScenarioConfig cfg = scenario_config(id, mode, 99);
            std::stringstream buf;
            save_config(cfg, buf);
            CHECK(load_config(buf) == cfg);
        }
    }
}

TEST_CASE("hand-written custom config builds") {
    const ScenarioConfig cfg = testutil::tiny_config(7);
    std::stringstream buf;
    save_config(cfg, buf);
    const ScenarioConfig loaded = load_config(buf);
    CHECK(loaded == cfg);
    RandomSource rng(loaded.seed);
    const ProblemInstance prob = build_instance(loaded, rng);
    CHECK(prob.dimension == 6);
    CHECK(prob.sub_functions.size() == 3);
}

TEST_CASE("config validation rejects bad values") {
    ScenarioConfig cfg = scenario_config(4, Mode::kDefault, 1);
    cfg.change_period = 0;
    std::stringstream buf;
    save_config(cfg, buf);
    CHECK_THROWS_AS(load_config(buf), std::runtime_error);

    ScenarioConfig mismatch = testutil::tiny_config(1);
    mismatch.separable_count = 2; // groups {2,3} + 2 != 6
    std::stringstream buf2;
    save_config(mismatch, buf2);
    CHECK_THROWS_AS(load_config(buf2), std::runtime_error);
}

TEST_CASE("unknown fields and malformed json are rejected") {
    const ScenarioConfig cfg = scenario_config(4, Mode::kDefault, 1);
    std::stringstream buf;
    save_config(cfg, buf);
    std::string text = buf.str();
    text.insert(text.find('{') + 1, "\n  \"bogus\": 1,");
    std::stringstream tampered(text);
    CHECK_THROWS_WITH_AS(load_config(tampered), doctest::Contains("bogus"), std::runtime_error);

    std::stringstream garbage("{not json");
    CHECK_THROWS_AS(load_config(garbage), std::runtime_error);
}

TEST_CASE("scenario names parse and print") {
    CHECK(parse_scenario_id("f1") == 1);
    CHECK(parse_scenario_id("f15") == 15);
    CHECK_THROWS_AS(parse_scenario_id("f0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario_id("f16"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario_id("x5"), std::invalid_argument);
    CHECK(scenario_name(scenario_config(5, Mode::kDefault, 1)) == "f5");
    CHECK(scenario_name(testutil::tiny_config(1)) == "custom");
    CHECK(parse_mode("default") == Mode::kDefault);
    CHECK(parse_mode("challenging") == Mode::kChallenging);
    CHECK_THROWS_AS(parse_mode("hard"), std::invalid_argument);
}
