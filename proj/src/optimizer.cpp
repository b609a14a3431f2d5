#include "gmpb/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace gmpb {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

using Evaluator = std::function<std::optional<double>(std::span<const double>)>;

double wall_seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void require_fresh(const Session& session, const char* who) {
    if (session.evaluations_used() != 0)
        throw std::invalid_argument(std::string(who) + ": session is not fresh");
}

void validate_params(const SwarmParams& p) {
    if (p.population < 2 || p.cc_population < 2)
        throw std::invalid_argument("SwarmParams: population must be >= 2");
    if (p.swarm_count < 1 || p.cc_swarms_per_group < 1)
        throw std::invalid_argument("SwarmParams: swarm_count must be >= 1");
    if (p.inertia < 0.0 || p.cognitive < 0.0 || p.social < 0.0)
        throw std::invalid_argument("SwarmParams: coefficients must be nonnegative");
    if (p.reinit_fraction < 0.0 || p.reinit_fraction > 1.0)
        throw std::invalid_argument("SwarmParams: reinit_fraction must be in [0,1]");
    if (p.max_iterations == 0)
        throw std::invalid_argument("SwarmParams: zero iterations requested");
}

RunResult finish_run(Session& session, const char* optimizer,
                     std::chrono::steady_clock::time_point start) {
    RunResult result;
    result.records = session.records();
    result.e_bbc = result.records.empty() ? std::numeric_limits<double>::quiet_NaN()
                                          : session.e_bbc();
    result.meta.optimizer = optimizer;
    result.wall_time_s = wall_seconds_since(start);
    return result;
}

struct Particle {
    std::vector<double> pos;
    std::vector<double> vel;
    std::vector<double> best_pos;
    double best_val = kNegInf;
    bool needs_eval = true;
};

struct OneSwarm {
    std::vector<Particle> parts;
    std::vector<double> best_pos;
    double best_val = kNegInf;
};

/// Several swarms over one (sub)space. All randomness flows through the
/// caller's RandomSource in a fixed order, so runs replay exactly.
class MultiSwarm {
public:
    MultiSwarm(int dim, Interval box, const SwarmParams& params, int swarms, int population)
        : dim_(dim), box_(box), params_(params) {
        vmax_ = 0.5 * box.width();
        exclusion_radius_ = params.exclusion_radius > 0.0
                                ? params.exclusion_radius
                                : box.width() / (2.0 * std::pow(swarms, 1.0 / dim));
        swarms_.resize(static_cast<std::size_t>(swarms));
        for (OneSwarm& s : swarms_) {
            s.parts.resize(static_cast<std::size_t>(population));
            s.best_pos.assign(static_cast<std::size_t>(dim), 0.0);
        }
    }

    void initialize(RandomSource& rng) {
        for (OneSwarm& s : swarms_)
            for (Particle& p : s.parts)
                spawn(p, rng);
    }

    /// One sweep: fresh particles evaluate in place, settled ones move first.
    /// Returns false when the evaluator reports budget exhaustion.
    bool iterate(RandomSource& rng, const Evaluator& eval) {
        for (OneSwarm& s : swarms_) {
            for (Particle& p : s.parts) {
                if (!p.needs_eval)
                    move(p, s, rng);
                const auto val = eval(p.pos);
                if (!val)
                    return false;
                p.needs_eval = false;
                if (*val > p.best_val || p.best_val == kNegInf) {
                    p.best_val = *val;
                    p.best_pos = p.pos;
                }
                if (p.best_val > s.best_val) {
                    s.best_val = p.best_val;
                    s.best_pos = p.best_pos;
                }
            }
        }
        apply_exclusion(rng);
        return true;
    }

    /// Change response: re-evaluate every personal best under the new
    /// landscape, rebuild swarm bests, then reinitialize the worst fraction.
    bool refresh_after_change(RandomSource& rng, const Evaluator& eval) {
        for (OneSwarm& s : swarms_) {
            s.best_val = kNegInf;
            for (Particle& p : s.parts) {
                if (p.needs_eval)
                    continue;
                const auto val = eval(p.best_pos);
                if (!val)
                    return false;
                p.best_val = *val;
                if (p.best_val > s.best_val) {
                    s.best_val = p.best_val;
                    s.best_pos = p.best_pos;
                }
            }
        }
        reinit_worst(rng);
        return true;
    }

    bool has_best() const {
        for (const OneSwarm& s : swarms_)
            if (s.best_val != kNegInf)
                return true;
        return false;
    }

    const OneSwarm& best_swarm() const {
        const OneSwarm* best = &swarms_.front();
        for (const OneSwarm& s : swarms_)
            if (s.best_val > best->best_val)
                best = &s;
        return *best;
    }

private:
    void spawn(Particle& p, RandomSource& rng) {
        p.pos.resize(static_cast<std::size_t>(dim_));
        for (double& x : p.pos)
            x = rng.next_uniform(box_.lo, box_.hi);
        p.vel.assign(static_cast<std::size_t>(dim_), 0.0);
        p.best_pos = p.pos;
        p.best_val = kNegInf;
        p.needs_eval = true;
    }

    void move(Particle& p, const OneSwarm& s, RandomSource& rng) {
        for (int j = 0; j < dim_; ++j) {
            const double r1 = rng.next_unit();
            const double r2 = rng.next_unit();
            double v = params_.inertia * p.vel[j] +
                       params_.cognitive * r1 * (p.best_pos[j] - p.pos[j]) +
                       params_.social * r2 * (s.best_pos[j] - p.pos[j]);
            v = std::clamp(v, -vmax_, vmax_);
            double x = p.pos[j] + v;
            if (x < box_.lo) {
                x = box_.lo;
                v = 0.0;
            } else if (x > box_.hi) {
                x = box_.hi;
                v = 0.0;
            }
            p.vel[j] = v;
            p.pos[j] = x;
        }
    }

    void reinit_worst(RandomSource& rng) {
        const auto count =
            static_cast<std::size_t>(std::floor(params_.reinit_fraction *
                                                static_cast<double>(swarms_.front().parts.size())));
        if (count == 0)
            return;
        for (OneSwarm& s : swarms_) {
            std::vector<std::size_t> order(s.parts.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return s.parts[a].best_val < s.parts[b].best_val;
            });
            order.resize(count);
            std::sort(order.begin(), order.end());
            for (const std::size_t idx : order)
                spawn(s.parts[idx], rng);
        }
    }

    void apply_exclusion(RandomSource& rng) {
        if (swarms_.size() < 2)
            return;
        std::vector<bool> doomed(swarms_.size(), false);
        for (std::size_t i = 0; i < swarms_.size(); ++i) {
            for (std::size_t k = i + 1; k < swarms_.size(); ++k) {
                if (doomed[i] || doomed[k])
                    continue;
                const OneSwarm& a = swarms_[i];
                const OneSwarm& b = swarms_[k];
                if (a.best_val == kNegInf || b.best_val == kNegInf)
                    continue;
                double dist2 = 0.0;
                for (int j = 0; j < dim_; ++j) {
                    const double diff = a.best_pos[j] - b.best_pos[j];
                    dist2 += diff * diff;
                }
                if (std::sqrt(dist2) < exclusion_radius_)
                    doomed[a.best_val <= b.best_val ? i : k] = true;
            }
        }
        for (std::size_t i = 0; i < swarms_.size(); ++i) {
            if (!doomed[i])
                continue;
            OneSwarm& s = swarms_[i];
            for (Particle& p : s.parts)
                spawn(p, rng);
            s.best_val = kNegInf;
            s.best_pos = s.parts.front().pos;
        }
    }

    int dim_;
    Interval box_;
    SwarmParams params_;
    double vmax_;
    double exclusion_radius_;
    std::vector<OneSwarm> swarms_;
};

} // namespace

Grouping oracle_grouping(const ProblemInstance& prob) {
    Grouping g;
    g.reserve(prob.sub_functions.size());
    for (const SubFunction& sf : prob.sub_functions)
        g.push_back(sf.variable_indices);
    return g;
}

Grouping single_grouping(int dimension) {
    Grouping g(1);
    g.front().resize(static_cast<std::size_t>(dimension));
    std::iota(g.front().begin(), g.front().end(), 0);
    return g;
}

Grouping separable_grouping(int dimension) {
    Grouping g;
    g.reserve(static_cast<std::size_t>(dimension));
    for (int j = 0; j < dimension; ++j)
        g.push_back({j});
    return g;
}

void validate_grouping(const Grouping& grouping, int dimension) {
    std::vector<int> seen(static_cast<std::size_t>(dimension), 0);
    for (const auto& group : grouping) {
        if (group.empty())
            throw std::invalid_argument("grouping: empty group");
        for (const int idx : group) {
            if (idx < 0 || idx >= dimension)
                throw std::invalid_argument("grouping: index out of range");
            if (seen[static_cast<std::size_t>(idx)]++)
                throw std::invalid_argument("grouping: index used twice");
        }
    }
    for (int j = 0; j < dimension; ++j)
        if (!seen[static_cast<std::size_t>(j)])
            throw std::invalid_argument("grouping: index " + std::to_string(j) + " missing");
}

std::vector<double> splice(std::span<const double> context, std::span<const int> group,
                           std::span<const double> candidate) {
    if (group.size() != candidate.size())
        throw std::invalid_argument("splice: group/candidate size mismatch");
    std::vector<double> out(context.begin(), context.end());
    for (std::size_t j = 0; j < group.size(); ++j)
        out[static_cast<std::size_t>(group[j])] = candidate[j];
    return out;
}

RunResult run_random_search(Session& session, RandomSource& rng) {
    require_fresh(session, "run_random_search");
    const auto start = std::chrono::steady_clock::now();
    const int d = session.problem().dimension;
    const Interval box = session.problem().bounds.search;
    std::vector<double> x(static_cast<std::size_t>(d));
    while (!session.finished()) {
        for (double& v : x)
            v = rng.next_uniform(box.lo, box.hi);
        session.evaluate(x);
    }
    return finish_run(session, "random", start);
}

RunResult run_mpso(Session& session, const SwarmParams& params, RandomSource& rng) {
    require_fresh(session, "run_mpso");
    validate_params(params);
    const auto start = std::chrono::steady_clock::now();
    const int d = session.problem().dimension;
    const Interval box = session.problem().bounds.search;

    const Evaluator eval = [&](std::span<const double> x) -> std::optional<double> {
        if (session.finished())
            return std::nullopt;
        return session.evaluate(x);
    };

    MultiSwarm swarm(d, box, params, params.swarm_count, params.population);
    swarm.initialize(rng);

    std::vector<double> sentinel;
    double sentinel_val = kNegInf;
    bool have_sentinel = false;

    for (std::size_t it = 0; it < params.max_iterations && !session.finished(); ++it) {
        bool changed = false;
        if (session.signals_changes()) {
            changed = session.take_change_signal();
        } else if (have_sentinel) {
            const auto val = eval(sentinel);
            if (!val)
                break;
            changed = (*val != sentinel_val);
            sentinel_val = *val;
        }
        if (changed && !swarm.refresh_after_change(rng, eval))
            break;
        if (!swarm.iterate(rng, eval))
            break;
        if (swarm.has_best()) {
            const OneSwarm& best = swarm.best_swarm();
            sentinel = best.best_pos;
            sentinel_val = best.best_val;
            have_sentinel = true;
        }
    }
    return finish_run(session, "mpso", start);
}

RunResult run_cc_mpso(Session& session, const Grouping& grouping, const SwarmParams& params,
                      RandomSource& rng) {
    require_fresh(session, "run_cc_mpso");
    validate_params(params);
    const int d = session.problem().dimension;
    validate_grouping(grouping, d);
    const auto start = std::chrono::steady_clock::now();
    const Interval box = session.problem().bounds.search;

    std::vector<double> context(static_cast<std::size_t>(d));
    for (double& v : context)
        v = rng.next_uniform(box.lo, box.hi);
    double ctx_val = kNegInf;
    {
        if (session.finished())
            return finish_run(session, "ccmpso", start);
        ctx_val = session.evaluate(context);
    }

    std::vector<MultiSwarm> group_swarms;
    group_swarms.reserve(grouping.size());
    for (const auto& group : grouping) {
        group_swarms.emplace_back(static_cast<int>(group.size()), box, params,
                                  params.cc_swarms_per_group, params.cc_population);
        group_swarms.back().initialize(rng);
    }

    std::vector<double> scratch(static_cast<std::size_t>(d));
    // Evaluates a group candidate inside the current context; adopts it into
    // the context whenever the composed value improves.
    const auto group_eval = [&](const std::vector<int>& group) {
        return Evaluator([&](std::span<const double> cand) -> std::optional<double> {
            if (session.finished())
                return std::nullopt;
            scratch = context;
            for (std::size_t j = 0; j < group.size(); ++j)
                scratch[static_cast<std::size_t>(group[j])] = cand[j];
            const double val = session.evaluate(scratch);
            if (val > ctx_val) {
                ctx_val = val;
                for (std::size_t j = 0; j < group.size(); ++j)
                    context[static_cast<std::size_t>(group[j])] = cand[j];
            }
            return val;
        });
    };

    std::vector<bool> needs_refresh(grouping.size(), false);
    for (std::size_t it = 0; it < params.max_iterations && !session.finished(); ++it) {
        bool changed = false;
        if (session.signals_changes()) {
            changed = session.take_change_signal();
        } else if (it > 0) {
            if (session.finished())
                break;
            const double val = session.evaluate(context);
            changed = (val != ctx_val);
            ctx_val = val;
        }
        if (changed)
            needs_refresh.assign(grouping.size(), true);

        bool out_of_budget = false;
        for (std::size_t g = 0; g < grouping.size(); ++g) {
            const Evaluator eval = group_eval(grouping[g]);
            if (needs_refresh[g]) {
                if (!group_swarms[g].refresh_after_change(rng, eval)) {
                    out_of_budget = true;
                    break;
                }
                needs_refresh[g] = false;
            }
            if (!group_swarms[g].iterate(rng, eval)) {
                out_of_budget = true;
                break;
            }
        }
        if (out_of_budget)
            break;
    }
    return finish_run(session, "ccmpso", start);
}

} // namespace gmpb
