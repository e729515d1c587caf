#include "mcp/experiment.hpp"

#include "mcp/gen.hpp"
#include "mcp/oracle.hpp"
#include "mcp/solver.hpp"
#include "mcp/split.hpp"
#include "mcp/verify.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

namespace mcp {

std::optional<Family> parse_family(std::string_view name) {
    if (name == "random")
        return Family::Random;
    if (name == "exhaustive")
        return Family::Exhaustive;
    if (name == "prop7")
        return Family::Proposition7;
    if (name == "split")
        return Family::Split;
    return std::nullopt;
}

std::string_view family_name(Family f) noexcept {
    switch (f) {
    case Family::Random: return "random";
    case Family::Exhaustive: return "exhaustive";
    case Family::Proposition7: return "prop7";
    case Family::Split: return "split";
    }
    return "random";
}

std::uint64_t instance_seed(std::uint64_t seed, int n, std::size_t i) noexcept {
    SplitMix64 mix(seed ^ (static_cast<std::uint64_t>(n) << 32) ^ static_cast<std::uint64_t>(i));
    return mix.next();
}

void validate(const ExperimentSpec& spec) {
    if (spec.n_min < 1 || spec.n_max < spec.n_min)
        throw std::invalid_argument("need 1 <= n-min <= n-max");
    if (spec.workers < 1)
        throw std::invalid_argument("workers must be positive");
    if (!(spec.p_red >= 0.0 && spec.p_red <= 1.0))
        throw std::invalid_argument("p-red must lie in [0, 1]");
    if (spec.family == Family::Exhaustive && spec.n_max > kEnumerateLimit)
        throw std::invalid_argument("exhaustive family needs n-max <= " +
                                    std::to_string(kEnumerateLimit));
    if (spec.family == Family::Proposition7 && spec.n_min < 3)
        throw std::invalid_argument("prop7 family needs n-min >= 3");
    if (spec.family == Family::Split && spec.n_min < 2)
        throw std::invalid_argument("split family needs n-min >= 2");
    if ((spec.oracle_cross_check || spec.hunt_four) && spec.n_max > kOracleDefaultLimit)
        throw std::invalid_argument("oracle cross-check needs n-max <= " +
                                    std::to_string(kOracleDefaultLimit));
}

namespace {

struct Instance {
    Colouring colouring;
    Json label; // identifies the instance for replay
};

std::vector<Instance> instances_for(const ExperimentSpec& spec, int n) {
    std::vector<Instance> out;
    switch (spec.family) {
    case Family::Random:
        for (std::size_t i = 0; i < spec.count; ++i) {
            const std::uint64_t s = instance_seed(spec.seed, n, i);
            out.push_back({gen_random(n, s, spec.p_red), Json{{"seed", s}}});
        }
        break;
    case Family::Exhaustive: {
        std::uint64_t t = 0;
        for_each_colouring(n, [&](const Colouring& c) {
            out.push_back({c, Json{{"index", t++}}});
            return true;
        });
        break;
    }
    case Family::Proposition7:
        out.push_back({gen_proposition7(n), Json{{"index", 0}}});
        break;
    case Family::Split:
        for (int a = 1; a < n; ++a)
            for (int b = 1; b < n; ++b)
                out.push_back({gen_split(a, b, n).first, Json{{"x1", a}, {"y1", b}}});
        break;
    }
    return out;
}

Json rows_json(const Colouring& c) {
    Json rows = Json::array();
    for (int i = 1; i <= c.size(); ++i) {
        std::string row;
        for (int j = 1; j <= c.size(); ++j)
            row += c.colour(i, j) == Colour::Red ? 'R' : 'B';
        rows.push_back(row);
    }
    return rows;
}

Json histogram_json(const std::map<std::size_t, std::size_t>& h) {
    Json out = Json::object();
    for (auto [k, v] : h)
        out[std::to_string(k)] = v;
    return out;
}

void write_witness(const std::string& dir, int n, std::size_t ordinal, const Colouring& c,
                   const OracleResult& r, const Json& label) {
    std::filesystem::create_directories(dir);
    const std::string stem = dir + "/witness-n" + std::to_string(n) + "-" + std::to_string(ordinal);
    write_colouring_file(stem + ".txt", c);
    Json side = oracle_json(n, r, verify_partition(c, r.witness).valid);
    side["instance"] = label;
    std::ofstream(stem + ".json") << side.dump(2) << '\n';
}

} // namespace

ExperimentOutcome run_experiment(const ExperimentSpec& spec) {
    validate(spec);
    const bool oracle = spec.oracle_cross_check || spec.hunt_four;
    const auto start = std::chrono::steady_clock::now();

    ExperimentOutcome outcome;
    Json& s = outcome.summary;
    s["family"] = family_name(spec.family);
    s["n_min"] = spec.n_min;
    s["n_max"] = spec.n_max;
    s["count"] = spec.count;
    s["seed"] = spec.seed;
    s["p_red"] = spec.p_red;
    s["oracle_cross_check"] = oracle;
    s["hunt_four"] = spec.hunt_four;

    std::size_t total = 0;
    std::map<std::size_t, std::size_t> solver_hist, oracle_hist;
    int max_minimum = 0;
    Json per_n = Json::array();
    Json discrepancies = Json::array();
    Json failures = Json::array();
    Json witnesses = Json::array();

    for (int n = spec.n_min; n <= spec.n_max; ++n) {
        const std::vector<Instance> inst = instances_for(spec, n);
        std::vector<Colouring> cs;
        cs.reserve(inst.size());
        for (const Instance& i : inst)
            cs.push_back(i.colouring);
        const std::vector<SolutionSummary> sums = batch_solve(cs, spec.workers);

        std::vector<OracleResult> minima(oracle ? cs.size() : 0);
        if (oracle) {
            const auto count = static_cast<std::ptrdiff_t>(cs.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(spec.workers)
            for (std::ptrdiff_t i = 0; i < count; ++i)
                minima[static_cast<std::size_t>(i)] = min_cycle_partition(cs[static_cast<std::size_t>(i)]);
        }

        std::map<std::size_t, std::size_t> hist_n;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const SolutionSummary& r = sums[i];
            if (!r.ok || r.cycles > 4) {
                outcome.failures = true;
                failures.push_back({{"n", n}, {"instance", inst[i].label},
                                    {"error", r.error.empty() ? "invalid partition" : r.error}});
                continue;
            }
            ++solver_hist[r.cycles];
            ++hist_n[r.cycles];
            if (!oracle)
                continue;
            const OracleResult& o = minima[i];
            ++oracle_hist[static_cast<std::size_t>(o.minimum)];
            max_minimum = std::max(max_minimum, o.minimum);
            if (static_cast<std::size_t>(o.minimum) > r.cycles)
                discrepancies.push_back({{"n", n}, {"instance", inst[i].label},
                                         {"solver", r.cycles}, {"oracle", o.minimum}});
            if (spec.hunt_four && o.minimum >= 4) {
                if (!spec.witness_dir.empty())
                    write_witness(spec.witness_dir, n, witnesses.size(), cs[i], o, inst[i].label);
                witnesses.push_back({{"n", n}, {"instance", inst[i].label},
                                     {"colouring", rows_json(cs[i])}});
            }
        }
        total += cs.size();
        per_n.push_back({{"n", n}, {"instances", cs.size()}, {"solver_cycles", histogram_json(hist_n)}});
    }

    s["instances"] = total;
    s["solver_cycles"] = histogram_json(solver_hist);
    if (oracle) {
        s["oracle_minima"] = histogram_json(oracle_hist);
        s["max_minimum"] = max_minimum;
    }
    s["per_n"] = std::move(per_n);
    s["failures"] = std::move(failures);
    s["discrepancies"] = std::move(discrepancies);
    if (spec.hunt_four)
        s["four_witnesses"] = std::move(witnesses);
    outcome.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return outcome;
}

} // namespace mcp
