// mcp: solve, verify, oracle, gen and experiment over 2-edge-coloured K_{n,n}.
//
// Exit codes: 0 success, 1 usage or invalid answer, 2 input parse error,
// 3 internal invariant failure, 4 oracle size refusal.

#include "mcp/core.hpp"
#include "mcp/experiment.hpp"
#include "mcp/gen.hpp"
#include "mcp/json_io.hpp"
#include "mcp/oracle.hpp"
#include "mcp/solver.hpp"
#include "mcp/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace mcp;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;
constexpr int kExitRefused = 4;

struct LoadError {
    int code;
};

Colouring load(const std::string& path) {
    try {
        return read_colouring_file(path);
    } catch (const ParseError& e) {
        std::cerr << "mcp: " << path << ": line " << e.line() << ", column " << e.column() << ": "
                  << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "mcp: " << path << ": " << e.what() << '\n';
    }
    throw LoadError{kExitParse};
}

std::string describe(const Cycle& c) {
    std::ostringstream os;
    os << kind_name(c.kind) << ' ' << (c.colour ? colour_name(*c.colour) : "-") << " (";
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
        os << (i ? " " : "") << to_string(c.vertices[i]);
    os << ')';
    return os.str();
}

fs::path write_bundle(const std::string& dir, const Colouring& c, const std::string& what,
                      const SolveTrace& trace) {
    const fs::path base = dir.empty() ? fs::temp_directory_path() : fs::path(dir);
    const auto stamp = std::chrono::system_clock::now().time_since_epoch().count();
    const fs::path out = base / ("mcp-bundle-" + std::to_string(stamp));
    fs::create_directories(out);
    write_colouring_file((out / "colouring.txt").string(), c);
    Json doc;
    doc["error"] = what;
    doc["trace"] = trace_json(trace);
    std::ofstream(out / "trace.json") << doc.dump(2) << '\n';
    return out;
}

struct SolveArgs {
    std::string input = "-";
    bool json = false;
    bool trace = false;
    bool verify = false;
    std::string bundle_dir;
};

int cmd_solve(const SolveArgs& a) {
    const Colouring c = load(a.input);
    Solution s;
    try {
        s = partition_le4(c);
    } catch (const SolverInvariantError& e) {
        const fs::path where = write_bundle(a.bundle_dir, c, e.what(), e.trace());
        std::cerr << "mcp: internal invariant failure: " << e.what() << "\nmcp: diagnostic bundle "
                  << where.string() << '\n';
        return kExitInternal;
    }
    const VerifyReport rep = verify_partition(c, s.partition);
    if (a.verify && (!rep.valid || s.partition.count() > 4)) {
        const std::string why = rep.valid ? "more than four cycles" : rep.failure->reason;
        const fs::path where = write_bundle(a.bundle_dir, c, why, s.trace);
        std::cerr << "mcp: verification failed: " << why << "\nmcp: diagnostic bundle "
                  << where.string() << '\n';
        return kExitInternal;
    }
    if (a.json) {
        std::cout << solution_json(c.size(), s, rep.valid, a.trace).dump(2) << '\n';
    } else {
        std::cout << "n " << c.size() << "\nroute " << route_name(s.route) << "\ncycles "
                  << s.partition.count() << '\n';
        for (const Cycle& cyc : s.partition.cycles)
            std::cout << describe(cyc) << '\n';
        std::cout << "verified " << (rep.valid ? "true" : "false") << '\n';
        if (a.trace)
            std::cout << trace_json(s.trace).dump(2) << '\n';
    }
    return rep.valid ? 0 : kExitInternal;
}

struct VerifyArgs {
    std::string input;
    std::string partition;
};

int cmd_verify(const VerifyArgs& a) {
    const Colouring c = load(a.input);
    Partition p;
    try {
        std::ifstream in(a.partition);
        if (!in)
            throw std::invalid_argument("cannot open " + a.partition);
        p = parse_partition_json(Json::parse(in));
    } catch (const std::exception& e) {
        std::cerr << "mcp: " << a.partition << ": " << e.what() << '\n';
        return kExitParse;
    }
    const VerifyReport rep = verify_partition(c, p);
    Json out;
    out["valid"] = rep.valid;
    out["cycles"] = rep.cycle_count;
    out["red"] = rep.red;
    out["blue"] = rep.blue;
    out["untagged"] = rep.untagged;
    out["reason"] = rep.failure ? Json(rep.failure->reason) : Json(nullptr);
    std::cout << out.dump(2) << '\n';
    return rep.valid ? 0 : kExitInvalid;
}

struct OracleArgs {
    std::string input;
    int limit = kOracleDefaultLimit;
    bool allow_exponential = false;
};

int cmd_oracle(const OracleArgs& a) {
    if (a.limit > kOracleDefaultLimit && !a.allow_exponential) {
        std::cerr << "mcp: --limit above " << kOracleDefaultLimit
                  << " needs --allow-exponential\n";
        return kExitRefused;
    }
    const Colouring c = load(a.input);
    try {
        const OracleResult r = min_cycle_partition(c, a.limit);
        std::cout << oracle_json(c.size(), r, verify_partition(c, r.witness).valid).dump(2) << '\n';
    } catch (const OracleRefusal& e) {
        std::cerr << "mcp: " << e.what() << '\n';
        return kExitRefused;
    }
    return 0;
}

struct GenArgs {
    std::string family = "random";
    int n = 0;
    std::uint64_t seed = 0;
    double p_red = 0.5;
    int x1 = 1;
    int y1 = 1;
    std::uint64_t index = 0;
    std::string output = "-";
};

int cmd_gen(const GenArgs& a) {
    Colouring c = uniform_colouring(1, Colour::Red);
    try {
        if (a.family == "random")
            c = gen_random(a.n, a.seed, a.p_red);
        else if (a.family == "prop7")
            c = gen_proposition7(a.n);
        else if (a.family == "split")
            c = gen_split(a.x1, a.y1, a.n).first;
        else if (a.family == "index")
            c = colouring_from_index(a.n, a.index);
        else if (a.family == "red")
            c = uniform_colouring(a.n, Colour::Red);
        else if (a.family == "blue")
            c = uniform_colouring(a.n, Colour::Blue);
        else
            throw std::invalid_argument("unknown family " + a.family);
    } catch (const std::exception& e) {
        std::cerr << "mcp: gen: " << e.what() << '\n';
        return kExitInvalid;
    }
    write_colouring_file(a.output, c);
    return 0;
}

int default_workers() {
    if (const char* env = std::getenv("MCP_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0)
            return w;
    }
    return 1;
}

struct ExperimentArgs {
    std::string family = "random";
    ExperimentSpec spec;
    std::string output = "-";
};

int cmd_experiment(ExperimentArgs a) {
    const auto family = parse_family(a.family);
    if (!family) {
        std::cerr << "mcp: experiment: unknown family " << a.family << '\n';
        return kExitInvalid;
    }
    a.spec.family = *family;
    ExperimentOutcome out;
    try {
        out = run_experiment(a.spec);
    } catch (const std::invalid_argument& e) {
        std::cerr << "mcp: experiment: " << e.what() << '\n';
        return kExitInvalid;
    }
    const std::string text = out.summary.dump(2) + '\n';
    if (a.output == "-") {
        std::cout << text;
    } else {
        std::ofstream(a.output) << text;
    }
    std::cerr << "mcp: experiment: " << out.summary["instances"].get<std::size_t>()
              << " instances in " << out.seconds << " s\n";
    return out.failures ? kExitInternal : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monochromatic cycle partitions of 2-edge-coloured K_{n,n}"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Partition into at most four monochromatic cycles");
    s->add_option("input", solve.input, "Colouring file, '-' for stdin");
    s->add_flag("--json", solve.json, "Print the solution as JSON");
    s->add_flag("--trace", solve.trace, "Include the construction trace");
    s->add_flag("--verify", solve.verify, "Exit 3 unless the partition re-verifies");
    s->add_option("--bundle-dir", solve.bundle_dir, "Where diagnostic bundles go");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Check a partition JSON against a colouring");
    v->add_option("input", verify.input, "Colouring file")->required();
    v->add_option("partition", verify.partition, "Solution or cycle-array JSON")->required();

    OracleArgs oracle;
    auto* o = app.add_subcommand("oracle", "Exact minimum by exhaustive search");
    o->add_option("input", oracle.input, "Colouring file, '-' for stdin")->required();
    o->add_option("--limit", oracle.limit, "Largest n accepted")
        ->check(CLI::Range(1, kOracleHardCap));
    o->add_flag("--allow-exponential", oracle.allow_exponential,
                "Acknowledge exponential cost of a raised --limit");

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Write a generated colouring");
    g->add_option("--family", gen.family, "random, prop7, split, index, red, blue");
    g->add_option("-n,--n", gen.n, "Size")->required()->check(CLI::PositiveNumber);
    g->add_option("--seed", gen.seed, "Random seed");
    g->add_option("--p-red", gen.p_red, "Red probability")->check(CLI::Range(0.0, 1.0));
    g->add_option("--x1", gen.x1, "|X1| for split");
    g->add_option("--y1", gen.y1, "|Y1| for split");
    g->add_option("--index", gen.index, "Lexicographic index for index");
    g->add_option("-o,--output", gen.output, "Output file, '-' for stdout");

    ExperimentArgs exp;
    exp.spec.workers = default_workers();
    auto* e = app.add_subcommand("experiment", "Batch runs with optional oracle cross-check");
    e->add_option("--family", exp.family, "random, exhaustive, prop7, split");
    e->add_option("--n-min", exp.spec.n_min, "Smallest n")->required();
    e->add_option("--n-max", exp.spec.n_max, "Largest n")->required();
    e->add_option("--count", exp.spec.count, "Instances per n for random");
    e->add_option("--seed", exp.spec.seed, "Base seed");
    e->add_option("--p-red", exp.spec.p_red, "Red probability for random");
    e->add_flag("--oracle-cross-check", exp.spec.oracle_cross_check, "Compare with the oracle");
    e->add_flag("--hunt-four", exp.spec.hunt_four, "Report colourings whose minimum is 4");
    e->add_option("--workers", exp.spec.workers, "Threads (default $MCP_WORKERS or 1)");
    e->add_option("--witness-dir", exp.spec.witness_dir, "Directory for witness files");
    e->add_option("-o,--output", exp.output, "Summary file, '-' for stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (s->parsed())
            return cmd_solve(solve);
        if (v->parsed())
            return cmd_verify(verify);
        if (o->parsed())
            return cmd_oracle(oracle);
        if (g->parsed())
            return cmd_gen(gen);
        return cmd_experiment(exp);
    } catch (const LoadError& err) {
        return err.code;
    }
}
