#pragma once

#include "gmpb/landscape.hpp"
#include "gmpb/rng.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace gmpb {

struct SessionConfig {
    long long change_period = 0; // evaluations per environment
    int environments = 0;
    bool signal_changes = false; // expose change times to the optimizer
};

/// One sealed environment: its best-before-change record.
struct EnvironmentRecord {
    int environment = 0;
    double best_fitness = 0.0;
    double optimum_fitness = 0.0;
    double error = 0.0;          // optimum - best, nonnegative
    long long evaluations = 0;   // cumulative evaluation count at seal time
    long long oob_queries = 0;   // queries outside the search box this environment
};

/// A budgeted evaluation stream over a moving landscape. Counts evaluations,
/// fires the environment change every change_period evaluations (the
/// evaluation landing exactly on the boundary still sees the old landscape),
/// and seals one best-before-change record per environment.
///
/// A Session is a single logical stream; evaluations are serialized.
/// Independent sessions may run concurrently.
class Session {
public:
    /// The RandomSource must outlive the session; environment transitions
    /// draw from it.
    Session(ProblemInstance problem, SessionConfig cfg, RandomSource& rng);

    /// Evaluates x under the current environment. Out-of-box queries are
    /// evaluated as-is but counted in the record. Throws std::runtime_error
    /// once the budget is exhausted.
    double evaluate(std::span<const double> x);

    bool finished() const { return finished_; }
    long long evaluations_used() const { return used_; }
    long long total_budget() const {
        return cfg_.change_period * static_cast<long long>(cfg_.environments);
    }
    long long remaining_budget() const { return total_budget() - used_; }
    int environment_index() const { return problem_.environment_index; }

    const ProblemInstance& problem() const { return problem_; }
    RandomSource& rng() { return *rng_; }

    double current_best() const { return best_; }
    double current_optimum() const { return optimum_; }

    const std::vector<EnvironmentRecord>& records() const { return records_; }

    /// Mean best-before-change error over the sealed environments.
    /// Throws std::logic_error when nothing has been sealed yet.
    double e_bbc() const;

    bool signals_changes() const { return cfg_.signal_changes; }
    /// One-shot: true once after each environment change, and only when the
    /// session was configured with signal_changes.
    bool take_change_signal();

private:
    void seal_environment();

    ProblemInstance problem_;
    SessionConfig cfg_;
    RandomSource* rng_;
    long long used_ = 0;
    long long oob_ = 0;
    double best_ = 0.0;
    double optimum_ = 0.0;
    bool finished_ = false;
    bool change_signal_ = false;
    std::vector<EnvironmentRecord> records_;
};

struct RunMeta {
    std::string scenario;
    std::string mode;
    std::string optimizer;
    std::uint64_t seed = 0;
    bool signal_changes = false;
    long long change_period = 0; // written to the file metadata when set
    int environments = 0;
};

/// Outcome of one optimizer run.
struct RunResult {
    double e_bbc = 0.0;
    std::vector<EnvironmentRecord> records;
    RunMeta meta;
    double wall_time_s = 0.0; // never serialized into result files
};

/// Writes the results CSV: `#`-prefixed metadata, the header row
/// environment,best_fitness,optimum_fitness,error,evaluations, one row per
/// sealed environment, then footer metadata (e_bbc, oob count). Deterministic
/// byte-for-byte for a given session state and meta.
void export_results(const Session& session, const RunMeta& meta, std::ostream& os);
void export_results(const Session& session, const RunMeta& meta, const std::string& path);

struct ParsedResults {
    std::vector<EnvironmentRecord> records;
    std::map<std::string, std::string> metadata;
    double e_bbc_recomputed = 0.0; // mean of the parsed error column
};

/// Parses a results CSV written by export_results.
/// Throws std::runtime_error on malformed input.
ParsedResults parse_results(std::istream& is);
ParsedResults parse_results_file(const std::string& path);

} // namespace gmpb
