#include "gmpb/harness.hpp"

#include "gmpb/dynamics.hpp"
#include "gmpb/version.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gmpb {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

Session::Session(ProblemInstance problem, SessionConfig cfg, RandomSource& rng)
    : problem_(std::move(problem)), cfg_(cfg), rng_(&rng) {
    if (cfg_.change_period < 1)
        throw std::invalid_argument("Session: change_period must be >= 1");
    if (cfg_.environments < 1)
        throw std::invalid_argument("Session: environments must be >= 1");
    best_ = -std::numeric_limits<double>::infinity();
    optimum_ = problem_optimum_value(problem_);
    records_.reserve(static_cast<std::size_t>(cfg_.environments));
}

double Session::evaluate(std::span<const double> x) {
    if (finished_)
        throw std::runtime_error("Session: evaluation budget exhausted");
    if (static_cast<int>(x.size()) != problem_.dimension)
        throw std::invalid_argument("Session: query dimension mismatch");

    const double fitness = evaluate_problem(x, problem_);
    ++used_;
    for (const double v : x)
        if (!problem_.bounds.search.contains(v)) {
            ++oob_;
            break;
        }
    if (fitness > best_)
        best_ = fitness;
    if (used_ % cfg_.change_period == 0)
        seal_environment();
    return fitness;
}

void Session::seal_environment() {
    records_.push_back({problem_.environment_index, best_, optimum_, optimum_ - best_, used_, oob_});
    if (static_cast<int>(records_.size()) == cfg_.environments) {
        finished_ = true;
        return;
    }
    problem_ = advance_environment(problem_, *rng_);
    optimum_ = problem_optimum_value(problem_);
    best_ = -std::numeric_limits<double>::infinity();
    oob_ = 0;
    if (cfg_.signal_changes)
        change_signal_ = true;
}

double Session::e_bbc() const {
    if (records_.empty())
        throw std::logic_error("e_bbc: no sealed environments");
    double acc = 0.0;
    for (const EnvironmentRecord& rec : records_)
        acc += rec.error;
    return acc / static_cast<double>(records_.size());
}

bool Session::take_change_signal() {
    if (!cfg_.signal_changes || !change_signal_)
        return false;
    change_signal_ = false;
    return true;
}

void export_results(const Session& session, const RunMeta& meta, std::ostream& os) {
    os << "# tool=gmpb/" << kVersion << "\n";
    os << "# seed=" << meta.seed << "\n";
    os << "# scenario=" << meta.scenario << "\n";
    os << "# mode=" << meta.mode << "\n";
    os << "# optimizer=" << meta.optimizer << "\n";
    if (meta.change_period > 0)
        os << "# change_period=" << meta.change_period << "\n";
    if (meta.environments > 0)
        os << "# environments=" << meta.environments << "\n";
    if (meta.signal_changes)
        os << "# signal_changes=true\n";
    os << "environment,best_fitness,optimum_fitness,error,evaluations\n";
    long long oob_total = 0;
    for (const EnvironmentRecord& rec : session.records()) {
        os << rec.environment << ',' << fmt17(rec.best_fitness) << ',' << fmt17(rec.optimum_fitness)
           << ',' << fmt17(rec.error) << ',' << rec.evaluations << "\n";
        oob_total += rec.oob_queries;
    }
    if (session.records().empty()) {
        os << "# error=no_sealed_environments\n";
    } else {
        os << "# e_bbc=" << fmt17(session.e_bbc()) << "\n";
    }
    os << "# oob_queries=" << oob_total << "\n";
}

void export_results(const Session& session, const RunMeta& meta, const std::string& path) {
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    export_results(session, meta, os);
}

ParsedResults parse_results(std::istream& is) {
    ParsedResults out;
    std::string line;
    bool saw_header = false;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        if (line[0] == '#') {
            std::string body = line.substr(1);
            if (!body.empty() && body[0] == ' ')
                body.erase(0, 1);
            const auto eq = body.find('=');
            if (eq != std::string::npos)
                out.metadata[body.substr(0, eq)] = body.substr(eq + 1);
            continue;
        }
        if (!saw_header) {
            if (line != "environment,best_fitness,optimum_fitness,error,evaluations")
                throw std::runtime_error("results parse error: unexpected header '" + line + "'");
            saw_header = true;
            continue;
        }
        EnvironmentRecord rec;
        char* end = nullptr;
        std::istringstream row(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(row, cell, ','))
            cells.push_back(cell);
        if (cells.size() != 5)
            throw std::runtime_error("results parse error: bad row '" + line + "'");
        rec.environment = static_cast<int>(std::strtol(cells[0].c_str(), &end, 10));
        rec.best_fitness = std::strtod(cells[1].c_str(), &end);
        rec.optimum_fitness = std::strtod(cells[2].c_str(), &end);
        rec.error = std::strtod(cells[3].c_str(), &end);
        rec.evaluations = std::strtoll(cells[4].c_str(), &end, 10);
        out.records.push_back(rec);
    }
    if (!saw_header)
        throw std::runtime_error("results parse error: missing header row");
    if (!out.records.empty()) {
        double acc = 0.0;
        for (const EnvironmentRecord& rec : out.records)
            acc += rec.error;
        out.e_bbc_recomputed = acc / static_cast<double>(out.records.size());
    }
    return out;
}

ParsedResults parse_results_file(const std::string& path) {
    std::ifstream is(path);
    if (!is)
        throw std::runtime_error("cannot open '" + path + "' for reading");
    return parse_results(is);
}

} // namespace gmpb
