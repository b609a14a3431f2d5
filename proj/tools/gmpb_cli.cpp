#include "gmpb/batch.hpp"
#include "gmpb/dynamics.hpp"
#include "gmpb/harness.hpp"
#include "gmpb/optimizer.hpp"
#include "gmpb/scenario.hpp"
#include "gmpb/version.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace gmpb;

/// Flag-value problems that should exit with the usage code.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct CommonFlags {
    std::string scenario;
    std::string config_path;
    std::string mode = "default";
    std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool allow_config) {
    auto* sc = cmd->add_option("--scenario", flags.scenario, "Scenario id, f1..f15");
    cmd->add_option("--mode", flags.mode, "default|challenging")->capture_default_str();
    cmd->add_option("--seed", flags.seed, "Run seed (decimal)")->capture_default_str();
    if (allow_config) {
        auto* cf = cmd->add_option("--config", flags.config_path,
                                   "Scenario config file (alternative to --scenario)");
        cf->excludes(sc);
        sc->excludes(cf);
    } else {
        sc->required();
    }
}

ScenarioConfig resolve_config(const CommonFlags& flags, const CLI::App* cmd) {
    if (!flags.config_path.empty()) {
        if (cmd->count("--mode"))
            throw UsageError("--mode cannot override a config file; regenerate the config instead");
        ScenarioConfig cfg = load_config(flags.config_path);
        if (cmd->count("--seed"))
            cfg.seed = flags.seed;
        return cfg;
    }
    if (flags.scenario.empty())
        throw UsageError("one of --scenario or --config is required");
    int id = 0;
    try {
        id = parse_scenario_id(flags.scenario);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Mode mode;
    try {
        mode = parse_mode(flags.mode);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return scenario_config(id, mode, flags.seed);
}

std::string groups_to_string(const std::vector<int>& groups) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i)
            os << ',';
        os << groups[i];
    }
    os << '}';
    return os.str();
}

int cmd_gen(const CommonFlags& flags, const CLI::App* cmd, std::string output) {
    ScenarioConfig cfg = resolve_config(flags, cmd);
    RandomSource rng(cfg.seed);
    ProblemInstance prob = build_instance(cfg, rng);
    const PromisingRegionCount regions = promising_region_count(prob);

    if (output.empty())
        output = "gmpb_" + scenario_name(cfg) + "_" + to_string(cfg.mode) + "_seed" +
                 std::to_string(cfg.seed) + ".json";
    save_config(cfg, output);

    std::cout << "scenario=" << scenario_name(cfg) << " mode=" << to_string(cfg.mode)
              << " seed=" << cfg.seed << "\n";
    std::cout << "d=" << cfg.dimension << " groups=" << groups_to_string(cfg.groups)
              << " separable=" << cfg.separable_count << "\n";
    std::cout << "change_period=" << cfg.change_period << " environments=" << cfg.environments
              << "\n";
    std::cout << "promising_regions=";
    if (regions.saturated)
        std::cout << "2^64+ (saturated)";
    else
        std::cout << regions.value;
    std::cout << "\n";
    for (const std::string& note : cfg.notes)
        std::cout << "note: " << note << "\n";
    std::cout << "wrote " << output << "\n";
    return 0;
}

int cmd_run(const CommonFlags& flags, const CLI::App* cmd, const std::string& optimizer,
            const std::string& grouping_name, bool signal_changes, const SwarmParams& params,
            std::string output) {
    ScenarioConfig cfg = resolve_config(flags, cmd);
    RandomSource rng(cfg.seed);
    ProblemInstance prob = build_instance(cfg, rng);

    SessionConfig scfg{cfg.change_period, cfg.environments, signal_changes};
    Session session(std::move(prob), scfg, rng);

    RunResult result;
    if (optimizer == "random") {
        result = run_random_search(session, rng);
    } else if (optimizer == "mpso") {
        result = run_mpso(session, params, rng);
    } else if (optimizer == "ccmpso") {
        Grouping grouping;
        if (grouping_name == "oracle")
            grouping = oracle_grouping(session.problem());
        else if (grouping_name == "single")
            grouping = single_grouping(cfg.dimension);
        else if (grouping_name == "separable")
            grouping = separable_grouping(cfg.dimension);
        else
            throw UsageError("unknown grouping '" + grouping_name +
                             "' (expected oracle|single|separable)");
        result = run_cc_mpso(session, grouping, params, rng);
    } else {
        throw UsageError("unknown optimizer '" + optimizer + "' (expected random|mpso|ccmpso)");
    }

    RunMeta meta{scenario_name(cfg), to_string(cfg.mode), result.meta.optimizer, cfg.seed,
                 signal_changes, cfg.change_period, cfg.environments};
    if (output.empty())
        output = "gmpb_" + scenario_name(cfg) + "_" + to_string(cfg.mode) + "_" +
                 meta.optimizer + "_seed" + std::to_string(cfg.seed) + ".csv";
    export_results(session, meta, output);

    std::cout << "E_BBC=" << fmt17(session.e_bbc()) << "\n";
    std::cerr << "wrote " << output << " (" << session.evaluations_used() << " evaluations, "
              << fmt17(result.wall_time_s) << "s)\n";
    return 0;
}

int cmd_grid(const CommonFlags& flags, const CLI::App* cmd, std::vector<int> dims, int resolution,
             int env, std::string output) {
    ScenarioConfig cfg = resolve_config(flags, cmd);
    if (dims.size() != 2)
        throw UsageError("--dims expects two indices, e.g. --dims 0,1");
    if (resolution < 2)
        throw UsageError("--resolution must be >= 2");
    if (env < 0)
        throw UsageError("--env must be >= 0");
    if (cfg.dimension < 2)
        throw UsageError("grid export needs a problem with at least 2 dimensions");
    if (dims[0] < 0 || dims[0] >= cfg.dimension || dims[1] < 0 || dims[1] >= cfg.dimension ||
        dims[0] == dims[1])
        throw UsageError("--dims indices must be distinct and inside [0, d)");

    RandomSource rng(cfg.seed);
    ProblemInstance prob = build_instance(cfg, rng);
    for (int t = 0; t < env; ++t)
        prob = advance_environment(prob, rng);

    GridSpec spec;
    spec.dim_a = dims[0];
    spec.dim_b = dims[1];
    spec.resolution = resolution;
    spec.base_point = optimum_point(prob); // slices pass through the tallest centers
    const auto samples = sample_grid(prob, spec);

    if (output.empty())
        output = "gmpb_" + scenario_name(cfg) + "_" + to_string(cfg.mode) + "_grid_seed" +
                 std::to_string(cfg.seed) + "_env" + std::to_string(env) + ".csv";
    std::ofstream os(output);
    if (!os)
        throw std::runtime_error("cannot open '" + output + "' for writing");
    os << "# tool=gmpb/" << kVersion << "\n";
    os << "# seed=" << cfg.seed << "\n";
    os << "# scenario=" << scenario_name(cfg) << "\n";
    os << "# mode=" << to_string(cfg.mode) << "\n";
    os << "# dims=" << dims[0] << "," << dims[1] << "\n";
    os << "# env=" << env << "\n";
    os << "# resolution=" << resolution << "\n";
    os << "# base_point=tallest_component_centers\n";
    os << "x_p,x_q,F\n";
    for (const GridSample& s : samples)
        os << fmt17(s.a) << ',' << fmt17(s.b) << ',' << fmt17(s.value) << "\n";
    std::cout << "wrote " << output << " (" << samples.size() << " samples)\n";
    return 0;
}

int cmd_report(const std::vector<std::string>& files, const std::string& output) {
    struct Row {
        std::string file;
        std::string scenario, mode, optimizer, seed;
        double e_bbc;
    };
    std::vector<Row> rows;
    std::vector<std::string> failed;
    for (const std::string& file : files) {
        try {
            ParsedResults parsed = parse_results_file(file);
            if (parsed.records.empty())
                throw std::runtime_error("no data rows");
            auto meta = [&](const char* key) {
                auto it = parsed.metadata.find(key);
                return it == parsed.metadata.end() ? std::string("?") : it->second;
            };
            rows.push_back({file, meta("scenario"), meta("mode"), meta("optimizer"), meta("seed"),
                            parsed.e_bbc_recomputed});
        } catch (const std::exception& e) {
            failed.push_back(file + ": " + e.what());
        }
    }
    for (const std::string& f : failed)
        std::cerr << "skipped " << f << "\n";
    if (rows.empty()) {
        std::cerr << "no parseable result files\n";
        return 1;
    }

    std::size_t width = 4;
    for (const Row& r : rows)
        width = std::max(width, r.file.size());
    std::printf("%-*s  %-8s %-11s %-9s %-6s %s\n", static_cast<int>(width), "file", "scenario",
                "mode", "optimizer", "seed", "e_bbc");
    double sum = 0.0;
    for (const Row& r : rows) {
        std::printf("%-*s  %-8s %-11s %-9s %-6s %s\n", static_cast<int>(width), r.file.c_str(),
                    r.scenario.c_str(), r.mode.c_str(), r.optimizer.c_str(), r.seed.c_str(),
                    fmt17(r.e_bbc).c_str());
        sum += r.e_bbc;
    }
    const double mean = sum / static_cast<double>(rows.size());
    double var = 0.0;
    for (const Row& r : rows)
        var += (r.e_bbc - mean) * (r.e_bbc - mean);
    const double stddev = rows.size() > 1 ? std::sqrt(var / static_cast<double>(rows.size() - 1)) : 0.0;
    std::printf("mean_e_bbc=%s stddev=%s n=%zu\n", fmt17(mean).c_str(), fmt17(stddev).c_str(),
                rows.size());

    if (!output.empty()) {
        std::ofstream os(output);
        if (!os)
            throw std::runtime_error("cannot open '" + output + "' for writing");
        os << "# tool=gmpb/" << kVersion << "\n";
        os << "file,scenario,mode,optimizer,seed,e_bbc\n";
        for (const Row& r : rows)
            os << r.file << ',' << r.scenario << ',' << r.mode << ',' << r.optimizer << ','
               << r.seed << ',' << fmt17(r.e_bbc) << "\n";
        os << "# mean=" << fmt17(mean) << "\n";
        os << "# stddev=" << fmt17(stddev) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized moving peaks benchmark for large-scale dynamic optimization"};
    app.set_version_flag("--version", std::string("gmpb ") + gmpb::kVersion);
    app.require_subcommand(1);

    CommonFlags gen_flags, run_flags, grid_flags;
    std::string gen_output, run_output, grid_output, report_output;

    auto* gen = app.add_subcommand("gen", "Build a scenario config and print its summary");
    add_common(gen, gen_flags, false);
    gen->add_option("--output", gen_output, "Config file path");

    auto* run = app.add_subcommand("run", "Run an optimizer for the full evaluation budget");
    add_common(run, run_flags, true);
    std::string optimizer = "random";
    std::string grouping = "oracle";
    bool signal_changes = false;
    gmpb::SwarmParams params;
    run->add_option("--optimizer", optimizer, "random|mpso|ccmpso")->capture_default_str();
    run->add_option("--grouping", grouping, "oracle|single|separable (ccmpso only)")
        ->capture_default_str();
    run->add_flag("--signal-changes", signal_changes,
                  "Expose change times to the optimizer (recorded in results)");
    run->add_option("--swarms", params.swarm_count, "Swarm count")->capture_default_str();
    run->add_option("--population", params.population, "Particles per swarm")
        ->capture_default_str();
    run->add_option("--inertia", params.inertia, "Inertia weight")->capture_default_str();
    run->add_option("--cognitive", params.cognitive, "Cognitive coefficient")
        ->capture_default_str();
    run->add_option("--social", params.social, "Social coefficient")->capture_default_str();
    run->add_option("--exclusion-radius", params.exclusion_radius,
                    "Swarm exclusion radius (<=0: auto)");
    run->add_option("--reinit-fraction", params.reinit_fraction,
                    "Fraction reinitialized after a change")
        ->capture_default_str();
    run->add_option("--output", run_output, "Results CSV path");

    auto* grid = app.add_subcommand("grid", "Export a 2-D landscape slice as CSV");
    add_common(grid, grid_flags, true);
    std::vector<int> dims{0, 1};
    int resolution = 101;
    int env = 0;
    grid->add_option("--dims", dims, "Two plotted coordinate indices")->delimiter(',');
    grid->add_option("--resolution", resolution, "Samples per axis")->capture_default_str();
    grid->add_option("--env", env, "Environment index to advance to")->capture_default_str();
    grid->add_option("--output", grid_output, "Grid CSV path");

    auto* report = app.add_subcommand("report", "Summarize result files");
    std::vector<std::string> report_files;
    report->add_option("files", report_files, "Results CSV files")->required();
    report->add_option("--output", report_output, "Optional summary CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen(gen_flags, gen, gen_output);
        if (run->parsed())
            return cmd_run(run_flags, run, optimizer, grouping, signal_changes, params, run_output);
        if (grid->parsed())
            return cmd_grid(grid_flags, grid, dims, resolution, env, grid_output);
        if (report->parsed())
            return cmd_report(report_files, report_output);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
