// Serial vs OpenMP batch_solve on seeded random instances. Checks that both
// produce the same summaries before reporting either timing.

#include "mcp/gen.hpp"
#include "mcp/solver.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <vector>

using namespace mcp;

namespace {

template <class F>
double seconds(F&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool same(const std::vector<SolutionSummary>& a, const std::vector<SolutionSummary>& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].n != b[i].n || a[i].route != b[i].route || a[i].cycles != b[i].cycles ||
            a[i].ok != b[i].ok)
            return false;
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"batch_solve benchmark"};
    int n = 200;
    std::size_t count = 64;
    int workers = 4;
    std::uint64_t seed = 1;
    double p_red = 0.5;
    int repeats = 3;
    app.add_option("-n", n, "Instance size")->check(CLI::PositiveNumber);
    app.add_option("--count", count, "Instances per batch");
    app.add_option("--workers", workers, "OpenMP threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Base seed");
    app.add_option("--p-red", p_red, "Red probability")->check(CLI::Range(0.0, 1.0));
    app.add_option("--repeats", repeats, "Timed repetitions (best is reported)")
        ->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    std::vector<Colouring> cs;
    cs.reserve(count);
    SplitMix64 seeds(seed);
    for (std::size_t i = 0; i < count; ++i)
        cs.push_back(gen_random(n, seeds.next(), p_red));

    std::vector<SolutionSummary> serial, parallel;
    double best_serial = 1e300, best_parallel = 1e300;
    for (int r = 0; r < repeats; ++r) {
        best_serial = std::min(best_serial, seconds([&] { serial = batch_solve_serial(cs); }));
        best_parallel = std::min(best_parallel, seconds([&] { parallel = batch_solve(cs, workers); }));
    }
    if (!same(serial, parallel)) {
        std::fprintf(stderr, "bench_batch: serial and parallel summaries differ\n");
        return 1;
    }
    std::size_t ok = 0;
    for (const SolutionSummary& s : serial)
        ok += s.ok ? 1 : 0;
    std::printf("n=%d count=%zu workers=%d ok=%zu serial=%.4fs parallel=%.4fs speedup=%.2f\n", n,
                count, workers, ok, best_serial, best_parallel, best_serial / best_parallel);
    return ok == count ? 0 : 1;
}
